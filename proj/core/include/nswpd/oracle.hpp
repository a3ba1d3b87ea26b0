#ifndef NSWPD_ORACLE_HPP
#define NSWPD_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "nswpd/graph.hpp"
#include "nswpd/newick.hpp"

namespace nswpd {

// Brute-force reference implementations. Deliberately naive and independent
// of the dynamic-programming solvers; used as cross-check oracles in tests.

class too_many_switchings : public std::runtime_error {
public:
    too_many_switchings()
        : std::runtime_error("switching enumeration exceeds the configured cap") {}
};

class too_many_taxa : public std::runtime_error {
public:
    too_many_taxa() : std::runtime_error("subset enumeration limited to 20 taxa") {}
};

class too_many_vertices : public std::runtime_error {
public:
    too_many_vertices() : std::runtime_error("exhaustive extension search limited to 7 vertices") {}
};

inline constexpr long long kDefaultSwitchingCap = 1 << 20;

// Enumerate every switching (one incoming edge per reticulation) and
// evaluate the PD of `taxa` in the induced switching tree.
Rational brute_pd_max(const Network& net, const TaxonSet& taxa,
                      long long cap = kDefaultSwitchingCap);
Rational brute_pd_min(const Network& net, const TaxonSet& taxa,
                      long long cap = kDefaultSwitchingCap);

enum class BudgetedVariant { Map, MaxTree };

struct BruteBudgetedResult {
    Rational value{0};
    TaxonSet taxa;
};

// Enumerate every taxon subset within budget.
BruteBudgetedResult brute_budgeted(const Network& net, const CostTable& costs,
                                   long long budget, BudgetedVariant variant,
                                   long long switching_cap = kDefaultSwitchingCap);

struct ExhaustiveNswResult {
    std::vector<int> parent;
    int width;
};

// Enumerate every rooted-tree parent map on the vertices of g.
ExhaustiveNswResult exhaustive_nsw(const Dag& g);

}  // namespace nswpd

#endif
