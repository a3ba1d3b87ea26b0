#ifndef NSWPD_REDUCE_HPP
#define NSWPD_REDUCE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "nswpd/graph.hpp"

namespace nswpd {

// All reduction bookkeeping is expressed in the vertex ids of the graph the
// rule was applied to; `stitch` replays a trace backwards.

struct ChainSuppression {
    int vertex;  // the suppressed chain vertex
    int child;   // its unique child (also a chain vertex at suppression time)
};

// Suppressing v rewires parent(v) -> child(v). The reduced graph gets fresh
// dense ids; `vertex_of` maps them back, `steps` use original ids.
struct ChainReduction {
    Dag reduced;
    std::vector<int> vertex_of;           // reduced id -> original id
    std::vector<ChainSuppression> steps;  // in application order
};

ChainReduction suppress_chain_pairs(const Dag& g);

class not_single_source : public std::runtime_error {
public:
    not_single_source() : std::runtime_error("cut-vertex rule requires a single-source graph") {}
};

struct CutPiece {
    Dag piece;                   // induced subgraph on component + cut vertex
    std::vector<int> vertex_of;  // piece id -> original id
    int shared;                  // cut vertex, as a piece id
};

// Splits at one articulation vertex of the underlying undirected graph.
// Requires g weakly connected with a single source; returns nothing when no
// cut vertex exists. Callers recurse on the pieces.
std::optional<std::vector<CutPiece>> split_at_cut_vertices(const Dag& g);

struct BaseSolution {
    std::vector<int> parent;  // tree-extension of the base-case graph
    int width;
};

// Edgeless graphs, directed trees, and biconnected single-reticulation
// graphs; nullopt otherwise.
std::optional<BaseSolution> solve_base_case(const Dag& g);

class inconsistent_trace : public std::runtime_error {
public:
    explicit inconsistent_trace(const std::string& msg) : std::runtime_error(msg) {}
};

// Reinserts suppressed chain vertices into an extension of the reduced graph
// (directly above their child), yielding an extension of the original graph.
// `parent` is sized for the original graph with -2 entries for suppressed
// vertices; replay happens in reverse application order.
std::vector<int> undo_chain_suppressions(const std::vector<ChainSuppression>& steps,
                                         std::vector<int> parent);

// Merges per-piece extensions (parent maps in piece-local ids) into one
// extension of the split graph.
std::vector<int> merge_cut_pieces(int vertex_count, const std::vector<CutPiece>& pieces,
                                  const std::vector<std::vector<int>>& piece_parents);

}  // namespace nswpd

#endif
