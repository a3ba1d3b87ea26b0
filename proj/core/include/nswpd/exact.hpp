#ifndef NSWPD_EXACT_HPP
#define NSWPD_EXACT_HPP

#include <optional>
#include <stdexcept>

#include "nswpd/extension.hpp"
#include "nswpd/graph.hpp"

namespace nswpd {

class bound_exceeded : public std::runtime_error {
public:
    explicit bound_exceeded(int bound)
        : std::runtime_error("optimal node scanwidth exceeds the requested bound " +
                             std::to_string(bound)),
          bound(bound) {}
    int bound;
};

class table_limit_exceeded : public std::runtime_error {
public:
    explicit table_limit_exceeded(size_t limit)
        : std::runtime_error("subset table exceeded " + std::to_string(limit) +
                             " entries; raise the limit or reduce the instance") {}
};

struct NswOptions {
    std::optional<int> upper_bound;       // reject solutions wider than this
    size_t max_table_entries = 1u << 22;  // memory guard for the subset table
};

struct NswResult {
    TreeExtension extension;
    int width;
};

// Subset dynamic program with threshold pruning; no reduction rules. The
// initial pruning bound comes from the greedy heuristic.
NswResult optimal_extension_exact(const Dag& g, const NswOptions& options = {});

// Greedy top-down extension: repeatedly peel off the source whose removal
// keeps the largest in-boundary of a remaining component smallest. Optimal on
// trees; an upper bound in general.
NswResult heuristic_extension(const Dag& g);

// Chain suppression, cut-vertex splitting and base cases around the exact
// solver; equals optimal_extension_exact on every input.
NswResult nsw_pipeline(const Dag& g, const NswOptions& options = {});

}  // namespace nswpd

#endif
