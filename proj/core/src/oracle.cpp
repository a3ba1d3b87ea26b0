#include "nswpd/oracle.hpp"

#include <algorithm>

#include "nswpd/extension.hpp"

namespace nswpd {

namespace {

// PD of `taxa` within the switching tree given by one chosen incoming edge
// per reticulation: total weight of kept edges whose head still has
// offspring in `taxa` using kept edges only.
Rational switching_pd(const Dag& g, const std::vector<char>& edge_kept,
                      const TaxonSet& taxa) {
    const int n = g.vertex_count();
    std::vector<char> reaches(n, 0);
    std::vector<int> stack;
    for (int leaf : taxa) {
        reaches[leaf] = 1;
        stack.push_back(leaf);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.in_edge_ids(v)) {
            if (!edge_kept[e]) continue;
            int u = g.edge(e).tail;
            if (!reaches[u]) {
                reaches[u] = 1;
                stack.push_back(u);
            }
        }
    }
    Rational total(0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_kept[e] && reaches[g.edge(e).head]) total += g.edge(e).weight;
    return total;
}

template <typename Visit>
void for_each_switching(const Network& net, long long cap, Visit visit) {
    const Dag& g = net.dag();
    std::vector<int> reticulations;
    long long combinations = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (net.is_reticulation(v)) {
            reticulations.push_back(v);
            combinations *= g.in_degree(v);
            if (combinations > cap) throw too_many_switchings();
        }
    }
    std::vector<char> kept(g.edge_count(), 1);
    std::vector<size_t> choice(reticulations.size(), 0);
    while (true) {
        for (size_t i = 0; i < reticulations.size(); ++i) {
            const auto& in = g.in_edge_ids(reticulations[i]);
            for (size_t j = 0; j < in.size(); ++j) kept[in[j]] = j == choice[i];
        }
        visit(kept);
        size_t i = 0;
        for (; i < reticulations.size(); ++i) {
            if (++choice[i] < static_cast<size_t>(g.in_degree(reticulations[i]))) break;
            choice[i] = 0;
        }
        if (i == reticulations.size()) break;
    }
}

}  // namespace

Rational brute_pd_max(const Network& net, const TaxonSet& taxa, long long cap) {
    bool first = true;
    Rational best(0);
    for_each_switching(net, cap, [&](const std::vector<char>& kept) {
        Rational value = switching_pd(net.dag(), kept, taxa);
        if (first || value > best) best = value;
        first = false;
    });
    return best;
}

Rational brute_pd_min(const Network& net, const TaxonSet& taxa, long long cap) {
    bool first = true;
    Rational best(0);
    for_each_switching(net, cap, [&](const std::vector<char>& kept) {
        Rational value = switching_pd(net.dag(), kept, taxa);
        if (first || value < best) best = value;
        first = false;
    });
    return best;
}

BruteBudgetedResult brute_budgeted(const Network& net, const CostTable& costs,
                                   long long budget, BudgetedVariant variant,
                                   long long switching_cap) {
    const std::vector<int>& leaves = net.leaves();
    if (leaves.size() > 20) throw too_many_taxa();
    std::vector<long long> cost(leaves.size());
    for (size_t i = 0; i < leaves.size(); ++i) cost[i] = costs.at(net.taxon(leaves[i]));

    BruteBudgetedResult best;  // the empty set is always affordable
    for (unsigned long mask = 1; mask < (1ul << leaves.size()); ++mask) {
        long long total = 0;
        TaxonSet subset;
        for (size_t i = 0; i < leaves.size(); ++i)
            if (mask >> i & 1) {
                total += cost[i];
                subset.push_back(leaves[i]);
            }
        if (total > budget) continue;
        std::sort(subset.begin(), subset.end());
        Rational value = variant == BudgetedVariant::Map
                             ? pd_map_value(net, subset)
                             : brute_pd_max(net, subset, switching_cap);
        if (value > best.value) {
            best.value = value;
            best.taxa = subset;
        }
    }
    return best;
}

ExhaustiveNswResult exhaustive_nsw(const Dag& g) {
    const int n = g.vertex_count();
    if (n > 7) throw too_many_vertices();
    if (n == 0) return {{}, 0};
    ExhaustiveNswResult best{{}, -1};
    // One root choice, then every other vertex picks any other vertex as its
    // parent; the validity filter discards non-trees and non-extensions.
    for (int root = 0; root < n; ++root) {
        std::vector<int> parent(n, 0);
        parent[root] = -1;
        auto lowest = [&](int v) { return v == 0 ? 1 : 0; };
        for (int v = 0; v < n; ++v)
            if (v != root) parent[v] = lowest(v);
        while (true) {
            if (is_tree_extension(g, parent)) {
                int width = nsw_of(g, parent);
                if (best.width == -1 || width < best.width) {
                    best.width = width;
                    best.parent = parent;
                }
            }
            int i = 0;
            for (; i < n; ++i) {
                if (i == root) continue;
                int next = parent[i] + 1;
                if (next == i) ++next;
                if (next < n) {
                    parent[i] = next;
                    break;
                }
                parent[i] = lowest(i);
            }
            if (i == n) break;
        }
    }
    return best;
}

}  // namespace nswpd
