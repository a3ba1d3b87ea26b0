#ifndef NSWPD_GRAPH_HPP
#define NSWPD_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nswpd/weight.hpp"

namespace nswpd {

struct Edge {
    int tail;
    int head;
    Rational weight;
};

class validation_error : public std::runtime_error {
public:
    enum Kind {
        MultipleRoots,
        CyclicInput,
        UnlabeledLeaf,
        DuplicateLabel,
        BadDegree,
        NegativeWeight,
        NotConnected,
    };
    validation_error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind(kind) {}
    Kind kind;
};

// Immutable weighted DAG on dense vertex ids 0..n-1. Adjacency lists keep
// input order. Construction verifies acyclicity.
class Dag {
public:
    Dag(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    const std::vector<int>& out_edge_ids(int v) const { return out_[v]; }
    const std::vector<int>& in_edge_ids(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    std::vector<int> children(int v) const;
    std::vector<int> parents(int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Vertices ordered so that every edge goes from earlier to later.
    const std::vector<int>& topological_order() const { return topo_; }

    int max_out_degree() const;
    Rational total_weight() const;

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<int> topo_;
};

// Validated phylogenetic network: single root of out-degree >= 2, leaves
// bijectively labeled, internal vertices tree vertices or reticulations.
class Network {
public:
    static Network validate(Dag dag, bool strict_reticulations = false);

    const Dag& dag() const { return dag_; }
    int root() const { return root_; }
    const std::vector<int>& leaves() const { return leaves_; }
    bool is_leaf(int v) const { return dag_.out_degree(v) == 0; }
    bool is_reticulation(int v) const { return dag_.in_degree(v) >= 2; }

    // All reticulations have in-degree exactly two.
    bool strict() const { return strict_; }

    // Throws std::out_of_range for unknown names.
    int leaf_by_taxon(const std::string& name) const;
    const std::string& taxon(int leaf) const { return dag_.label(leaf); }

    Rational total_weight() const { return dag_.total_weight(); }

private:
    Network(Dag dag, int root, std::vector<int> leaves, bool strict)
        : dag_(std::move(dag)), root_(root), leaves_(std::move(leaves)), strict_(strict) {}
    Dag dag_;
    int root_;
    std::vector<int> leaves_;
    bool strict_;
};

// A set of taxa given as sorted leaf vertex ids.
using TaxonSet = std::vector<int>;

TaxonSet make_taxon_set(const Network& net, const std::vector<std::string>& names);

// Edge ids whose head is an ancestor of some leaf in the set.
std::vector<int> offspring_edges(const Network& net, const TaxonSet& taxa);

Rational pd_map_value(const Network& net, const TaxonSet& taxa);

// Max over biconnected components of the in-edge excess |E_c| - |V_c| + 1.
int network_level(const Network& net);

}  // namespace nswpd

#endif
