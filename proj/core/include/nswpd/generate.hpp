#ifndef NSWPD_GENERATE_HPP
#define NSWPD_GENERATE_HPP

#include <cstdint>
#include <stdexcept>

#include "nswpd/graph.hpp"
#include "nswpd/newick.hpp"

namespace nswpd {

class infeasible_parameters : public std::runtime_error {
public:
    explicit infeasible_parameters(const std::string& msg) : std::runtime_error(msg) {}
};

// Random binary tree grown by leaf splits, then `n_reticulations` cross
// edges added by subdividing two comparable edges; integer weights in 1..10.
// Taxa are named t1..tN. Deterministic per seed.
Network gen_network(int n_leaves, int n_reticulations, uint64_t seed);

// Per-taxon integer costs: round(LogNormal(mu=2, sigma=0.8)) clamped to >= 1.
CostTable sample_costs(const Network& net, uint64_t seed);

// Contract the shortest contractible edges (ties by edge id) until
// ceil(fraction * |E|) contractions happened or none applies.
Network contract_shortest(const Network& net, double fraction, uint64_t seed);

}  // namespace nswpd

#endif
