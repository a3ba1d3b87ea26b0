#ifndef NSWPD_PD_HPP
#define NSWPD_PD_HPP

#include <stdexcept>
#include <vector>

#include "nswpd/extension.hpp"
#include "nswpd/graph.hpp"
#include "nswpd/newick.hpp"

namespace nswpd {

// Diversity solvers over a tree-extension. All three run bottom-up over the
// extension with per-vertex tables indexed by subsets of the bag; the
// budgeted pair additionally carries an integer budget dimension.

class empty_taxon_set : public std::runtime_error {
public:
    empty_taxon_set() : std::runtime_error("taxon set must be non-empty") {}
};

struct DpCell {
    bool ok = false;  // infeasible cells stay flagged, never arithmetic
    Rational value{0};
};

// [Y mask][budget] rows of one subtree table.
using DpTable = std::vector<std::vector<DpCell>>;

// One knapsack-style fold step per child, enumerating block submasks and
// budget splits; no fast subset convolution. `child_masks[j]` places child
// j's index set inside the shared universe of `universe_bits` positions;
// child tables are indexed by masks compressed onto their own set bits.
// `slack` seeds unused budget as free (the "cost at most b" reading);
// without it splits are exact.
DpTable combine_children(const std::vector<unsigned>& child_masks,
                         const std::vector<const DpTable*>& child_tables,
                         int universe_bits, long long budget_cap, bool maximize,
                         bool slack);

struct BudgetedResult {
    Rational value{0};
    TaxonSet taxa;
    // Max-tree only: edge ids of a witness forest achieving the value.
    std::vector<int> witness_edges;
};

// Maximize PDmap(A) subject to c(A) <= budget. Budgets above the total taxon
// cost are clamped. `extension_parent` must be a tree-extension of the
// network (extension_error otherwise).
BudgetedResult solve_b_map_pd(const Network& net, const CostTable& costs, long long budget,
                              const std::vector<int>& extension_parent);

// Maximize PDmax(A) subject to c(A) <= budget; also returns witness edges.
BudgetedResult solve_b_maxtree_pd(const Network& net, const CostTable& costs,
                                  long long budget,
                                  const std::vector<int>& extension_parent);

// Run the budgeted solver with a fixed table route instead of the automatic
// budget-versus-complement selection. Route 1 tracks the cost of the kept
// taxa, route 2 the cost of the dropped ones; both must agree — exposed so
// tests can pin either side.
BudgetedResult solve_budgeted_forced(const Network& net, const CostTable& costs,
                                     long long budget,
                                     const std::vector<int>& extension_parent,
                                     bool maxtree, int route);

// PDmin(A): cheapest switching tree restricted to the ancestors of A.
Rational compute_min_tree_pd(const Network& net, const TaxonSet& taxa,
                             const std::vector<int>& extension_parent);

// Re-hangs every subtree under a network leaf onto the nearest non-leaf
// extension ancestor, so network leaves become extension leaves. Keeps
// validity and never increases the width.
std::vector<int> normalize_leaf_positions(const Dag& g, std::vector<int> parent);

struct Restriction {
    Dag sub;                     // induced on the ancestors of the taxa
    std::vector<int> vertex_of;  // sub id -> original id
    std::vector<int> parent;     // projected extension of `sub`
};

Restriction restrict_to_ancestors(const Network& net, const TaxonSet& taxa,
                                  const std::vector<int>& parent);

}  // namespace nswpd

#endif
