#include "nswpd/pd.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace nswpd {

namespace {

// Bits of s sitting at the set positions of mask, packed densely.
unsigned compress_mask(unsigned s, unsigned mask) {
    unsigned out = 0;
    int j = 0;
    for (unsigned m = mask; m; m &= m - 1, ++j) {
        unsigned bit = m & (~m + 1);
        if (s & bit) out |= 1u << j;
    }
    return out;
}

unsigned expand_mask(unsigned s, unsigned mask) {
    unsigned out = 0;
    int j = 0;
    for (unsigned m = mask; m; m &= m - 1, ++j) {
        unsigned bit = m & (~m + 1);
        if ((s >> j) & 1) out |= bit;
    }
    return out;
}

// The fold runs in either exact rationals or, when every weight fits a common
// integer scale, in plain long long (same results, much cheaper arithmetic).
template <class V>
struct CellT {
    bool ok = false;
    V value{};
};

template <class V>
using TableT = std::vector<std::vector<CellT<V>>>;

template <class V>
void improve(CellT<V>& cell, const V& candidate, bool maximize) {
    if (!cell.ok || (maximize ? candidate > cell.value : candidate < cell.value)) {
        cell.ok = true;
        cell.value = candidate;
    }
}

// With `cap_stages`, intermediate stages only carry budget rows up to the
// prefix sum of child caps; reads past a stage's cap clamp to the cap in the
// slack reading (values are monotone in the budget there) and are infeasible
// in the exact one.
template <class V>
std::vector<TableT<V>> fold_stages(const std::vector<unsigned>& child_masks,
                                   const std::vector<const TableT<V>*>& child_tables,
                                   int universe_bits, long long budget_cap, bool maximize,
                                   bool slack, bool cap_stages) {
    const size_t nmask = size_t(1) << universe_bits;
    std::vector<TableT<V>> stages;
    long long prev_cap = cap_stages ? 0 : budget_cap;
    TableT<V> seed(nmask, std::vector<CellT<V>>(prev_cap + 1));
    if (slack)
        for (long long b = 0; b <= prev_cap; ++b) seed[0][b] = {true, V{}};
    else
        seed[0][0] = {true, V{}};
    stages.push_back(std::move(seed));

    // Inside the engine every row is a monotone step function of the budget:
    // nondecreasing in the slack ("cost at most b") reading, nonincreasing in
    // the complement ("dropped cost at least b") one. A max-plus convolution
    // of step functions only needs the breakpoint pairs; a prefix- resp.
    // suffix-max sweep afterwards restores the dense rows. The generic
    // uncapped fold keeps the dense split enumeration.
    const bool sparse = maximize && cap_stages;

    for (size_t j = 0; j < child_masks.size(); ++j) {
        const unsigned mask = child_masks[j];
        const TableT<V>& child = *child_tables[j];
        const long long child_cap = static_cast<long long>(child.front().size()) - 1;
        const long long next_cap =
            cap_stages ? std::min(budget_cap, prev_cap + child_cap) : budget_cap;
        const TableT<V>& prev = stages.back();
        TableT<V> next(nmask, std::vector<CellT<V>>(next_cap + 1));

        // Slack rows break at segment starts, complement rows at segment ends
        // (the largest budget still carrying each value).
        std::vector<std::vector<std::pair<long long, V>>> child_bp;
        if (sparse) {
            child_bp.resize(child.size());
            for (size_t r = 0; r < child.size(); ++r) {
                auto scan = [&](long long k1) {
                    const CellT<V>& a = child[r][k1];
                    if (a.ok && (child_bp[r].empty() ||
                                 a.value > child_bp[r].back().second))
                        child_bp[r].push_back({k1, a.value});
                };
                if (slack)
                    for (long long k1 = 0; k1 <= child_cap; ++k1) scan(k1);
                else
                    for (long long k1 = child_cap; k1 >= 0; --k1) scan(k1);
            }
        }

        for (unsigned s = 0; s < nmask; ++s) {
            const unsigned part = s & mask;
            unsigned t = part;
            while (true) {
                const std::vector<CellT<V>>& child_row = child[compress_mask(t, mask)];
                const std::vector<CellT<V>>& prev_row_base = prev[s & ~t];
                if (sparse) {
                    const auto& f = child_bp[compress_mask(t, mask)];
                    bool have = false;
                    V best{};
                    auto emit = [&](long long k2) {
                        const CellT<V>& p = prev_row_base[k2];
                        if (!p.ok || (have && !(p.value > best))) return;
                        have = true;
                        best = p.value;
                        if (slack) {
                            for (const auto& [b1, v1] : f) {
                                const long long kk = b1 + k2;
                                if (kk > next_cap) break;
                                improve(next[s][kk], v1 + p.value, true);
                            }
                        } else {
                            for (const auto& [b1, v1] : f) {
                                const long long kk = std::min(b1 + k2, next_cap);
                                improve(next[s][kk], v1 + p.value, true);
                            }
                        }
                    };
                    if (!f.empty()) {
                        if (slack)
                            for (long long k2 = 0; k2 <= prev_cap; ++k2) emit(k2);
                        else
                            for (long long k2 = prev_cap; k2 >= 0; --k2) emit(k2);
                    }
                } else {
                    for (long long k = 0; k <= next_cap; ++k) {
                        CellT<V>& out = next[s][k];
                        const long long k_hi = std::min(k, child_cap);
                        for (long long k1 = 0; k1 <= k_hi; ++k1) {
                            const CellT<V>& a = child_row[k1];
                            if (!a.ok) continue;
                            long long k2 = k - k1;
                            if (k2 > prev_cap) {
                                if (!slack) continue;
                                k2 = prev_cap;
                            }
                            const CellT<V>& b = prev_row_base[k2];
                            if (!b.ok) continue;
                            improve(out, a.value + b.value, maximize);
                        }
                    }
                }
                if (t == 0) break;
                t = (t - 1) & part;
            }
            if (sparse) {
                if (slack) {
                    for (long long k = 1; k <= next_cap; ++k)
                        if (next[s][k - 1].ok)
                            improve(next[s][k], next[s][k - 1].value, true);
                } else {
                    for (long long k = next_cap - 1; k >= 0; --k)
                        if (next[s][k + 1].ok)
                            improve(next[s][k], next[s][k + 1].value, true);
                }
            }
        }
        stages.push_back(std::move(next));
        prev_cap = next_cap;
    }
    return stages;
}

}  // namespace

DpTable combine_children(const std::vector<unsigned>& child_masks,
                         const std::vector<const DpTable*>& child_tables,
                         int universe_bits, long long budget_cap, bool maximize,
                         bool slack) {
    std::vector<TableT<Rational>> converted;
    converted.reserve(child_tables.size());
    for (const DpTable* t : child_tables) {
        TableT<Rational> c(t->size());
        for (size_t i = 0; i < t->size(); ++i) {
            c[i].resize((*t)[i].size());
            for (size_t k = 0; k < (*t)[i].size(); ++k)
                c[i][k] = {(*t)[i][k].ok, (*t)[i][k].value};
        }
        converted.push_back(std::move(c));
    }
    std::vector<const TableT<Rational>*> ptrs;
    for (const TableT<Rational>& c : converted) ptrs.push_back(&c);
    TableT<Rational> out = fold_stages<Rational>(child_masks, ptrs, universe_bits,
                                                 budget_cap, maximize, slack, false)
                               .back();
    DpTable result(out.size());
    for (size_t i = 0; i < out.size(); ++i) {
        result[i].resize(out[i].size());
        for (size_t k = 0; k < out[i].size(); ++k)
            result[i][k] = {out[i][k].ok, out[i][k].value};
    }
    return result;
}

std::vector<int> normalize_leaf_positions(const Dag& g, std::vector<int> parent) {
    const std::vector<int> original = parent;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int p = original[v];
        while (p != -1 && g.out_degree(p) == 0) p = original[p];
        parent[v] = p;
    }
    return parent;
}

namespace {

// Shared machinery for the two budgeted solvers.
template <class V>
struct BudgetedEngine {
    const Dag& g;
    bool maxtree;
    int route;        // 1: cost of the kept taxa, 2: cost of the dropped taxa
    long long broot;  // B or its complement, whichever drives the tables

    TreeExtension ext;
    std::vector<long long> cost;  // per vertex; 0 off the leaves
    std::vector<long long> cap;   // budget rows kept per subtree
    std::vector<V> in_weight_sum;
    std::vector<V> edge_weight;  // per edge id, scaled into V

    // Per-vertex universe: sorted bag plus the vertex itself.
    std::vector<std::vector<int>> bag;
    std::vector<std::vector<int>> universe;
    std::vector<unsigned> vbit;
    std::vector<unsigned> parent_bits;               // network parents within universe
    std::vector<std::vector<int>> kids;              // extension children, cheap first
    std::vector<std::vector<unsigned>> child_masks;  // aligned with `kids`
    std::vector<unsigned> bag_in_universe;

    std::vector<TableT<V>> tab;

    template <class Conv>
    BudgetedEngine(const Network& net, bool maxtree, int route, long long broot,
                   std::vector<long long> vertex_cost, std::vector<int> parent,
                   Conv conv)
        : g(net.dag()), maxtree(maxtree), route(route), broot(broot),
          ext(TreeExtension::build(g, std::move(parent))), cost(std::move(vertex_cost)) {
        const int n = g.vertex_count();
        cap.assign(n, 0);
        in_weight_sum.assign(n, V{});
        edge_weight.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) edge_weight[e] = conv(g.edge(e).weight);
        bag.resize(n);
        universe.resize(n);
        vbit.assign(n, 0);
        parent_bits.assign(n, 0);
        kids.resize(n);
        child_masks.resize(n);
        bag_in_universe.assign(n, 0);
        tab.resize(n);

        std::vector<long long> subcost(n, 0);
        for (int v : ext.bottom_up_order()) {
            subcost[v] = cost[v];
            for (int w : ext.children(v)) subcost[v] += subcost[w];
            cap[v] = std::min(broot, subcost[v]);
        }
        for (int v = 0; v < n; ++v) {
            for (int e : g.in_edge_ids(v)) in_weight_sum[v] = in_weight_sum[v] + edge_weight[e];
            bag[v] = ext.bag_vertices(v);
            universe[v] = bag[v];
            universe[v].insert(
                std::upper_bound(universe[v].begin(), universe[v].end(), v), v);
            if (universe[v].size() > 25)
                throw std::runtime_error("extension width too large for the budgeted DP");
        }
        for (int v = 0; v < n; ++v) {
            auto bit_of = [&](int u) {
                auto it = std::lower_bound(universe[v].begin(), universe[v].end(), u);
                assert(it != universe[v].end() && *it == u);
                return 1u << (it - universe[v].begin());
            };
            vbit[v] = bit_of(v);
            for (int e : g.in_edge_ids(v)) parent_bits[v] |= bit_of(g.edge(e).tail);
            for (int u : bag[v]) bag_in_universe[v] |= bit_of(u);
            // Folding cheap subtrees first keeps the stage caps small.
            kids[v] = ext.children(v);
            std::sort(kids[v].begin(), kids[v].end(),
                      [&](int a, int b) { return cap[a] < cap[b]; });
            for (int w : kids[v]) {
                unsigned mask = 0;
                for (int u : bag[w]) mask |= bit_of(u);
                child_masks[v].push_back(mask);
            }
        }
    }

    TableT<V> leaf_table(int x) const {
        const long long c = cost[x];
        const V w = edge_weight[g.in_edge_ids(x).front()];
        TableT<V> t(2, std::vector<CellT<V>>(cap[x] + 1));
        for (long long b = 0; b <= cap[x]; ++b) {
            if (route == 1) {
                if (b >= c) {
                    t[0][b] = {true, w};
                    t[1][b] = {true, w};
                } else {
                    t[0][b] = {true, V{}};
                }
            } else {
                if (b == 0) {
                    t[0][b] = {true, w};
                    t[1][b] = {true, w};
                } else {
                    t[0][b] = {true, V{}};  // b <= c holds by the cap
                }
            }
        }
        return t;
    }

    std::vector<TableT<V>> stages_at(int v) const {
        std::vector<const TableT<V>*> child_tables;
        for (int w : kids[v]) child_tables.push_back(&tab[w]);
        return fold_stages<V>(child_masks[v], child_tables,
                              static_cast<int>(universe[v].size()), cap[v], true,
                              route == 1, true);
    }

    void fill() {
        for (int v : ext.bottom_up_order()) {
            if (g.out_degree(v) == 0) {
                tab[v] = leaf_table(v);
                continue;
            }
            const TableT<V> last = stages_at(v).back();
            // The last stage always reaches the subtree cap: child caps sum to
            // at least min(broot, subtree cost).
            assert(static_cast<long long>(last.front().size()) == cap[v] + 1);
            const int bag_bits = static_cast<int>(bag[v].size());
            TableT<V> t(size_t(1) << bag_bits, std::vector<CellT<V>>(cap[v] + 1));
            for (unsigned y = 0; y < t.size(); ++y) {
                const unsigned y_u = expand_mask(y, bag_in_universe[v]);
                for (long long b = 0; b <= cap[v]; ++b) {
                    CellT<V> cell = last[y_u][b];
                    if (!maxtree) {
                        const unsigned taken = (y_u & ~parent_bits[v]) | vbit[v];
                        const CellT<V>& inner = last[taken][b];
                        if (inner.ok) improve(cell, in_weight_sum[v] + inner.value, true);
                    } else {
                        for (int e : g.in_edge_ids(v)) {
                            auto it = std::lower_bound(universe[v].begin(),
                                                       universe[v].end(), g.edge(e).tail);
                            const unsigned pbit = 1u << (it - universe[v].begin());
                            const unsigned taken = (y_u & ~pbit) | vbit[v];
                            const CellT<V>& inner = last[taken][b];
                            if (inner.ok)
                                improve(cell, edge_weight[e] + inner.value, true);
                        }
                    }
                    t[y][b] = cell;
                }
            }
            tab[v] = std::move(t);
        }
    }

    void backtrack(int v, unsigned y_bag, long long b, std::vector<char>& selected,
                   std::vector<int>& witness) const {
        if (g.out_degree(v) == 0) {
            const V w = edge_weight[g.in_edge_ids(v).front()];
            bool take;
            if (y_bag == 1)
                take = true;
            else if (route == 1)
                take = b >= cost[v] && w > V{};
            else
                take = b == 0 && w > V{};
            if (take) {
                selected[v] = 1;
                if (maxtree) witness.push_back(g.in_edge_ids(v).front());
            }
            return;
        }
        const std::vector<TableT<V>> stages = stages_at(v);
        const TableT<V>& last = stages.back();
        const CellT<V> target = tab[v][y_bag][b];
        assert(target.ok);
        unsigned s = expand_mask(y_bag, bag_in_universe[v]);
        V remaining = target.value;
        if (!(last[s][b].ok && last[s][b].value == target.value)) {
            // The take branch was used.
            if (!maxtree) {
                selected[v] = 1;
                s = (s & ~parent_bits[v]) | vbit[v];
                remaining = target.value - in_weight_sum[v];
            } else {
                bool found = false;
                for (int e : g.in_edge_ids(v)) {
                    auto it = std::lower_bound(universe[v].begin(), universe[v].end(),
                                               g.edge(e).tail);
                    const unsigned pbit = 1u << (it - universe[v].begin());
                    const unsigned taken =
                        (expand_mask(y_bag, bag_in_universe[v]) & ~pbit) | vbit[v];
                    const CellT<V>& inner = last[taken][b];
                    if (inner.ok && edge_weight[e] + inner.value == target.value) {
                        witness.push_back(e);
                        s = taken;
                        remaining = inner.value;
                        found = true;
                        break;
                    }
                }
                assert(found);
                (void)found;
            }
        }
        // Undo the fold child by child.
        long long k = b;
        for (int j = static_cast<int>(kids[v].size()) - 1; j >= 0; --j) {
            const unsigned mask = child_masks[v][j];
            const TableT<V>& child = tab[kids[v][j]];
            const long long child_cap = static_cast<long long>(child.front().size()) - 1;
            const long long prev_cap =
                static_cast<long long>(stages[j].front().size()) - 1;
            const unsigned part = s & mask;
            bool found = false;
            for (unsigned t = 0; t <= part && !found; ++t) {
                if ((t & part) != t) continue;
                const CellT<V>* prev_row = stages[j][s & ~t].data();
                const std::vector<CellT<V>>& child_row = child[compress_mask(t, mask)];
                for (long long k1 = 0; k1 <= std::min(k, child_cap); ++k1) {
                    const CellT<V>& a = child_row[k1];
                    long long k2 = k - k1;
                    if (k2 > prev_cap) {
                        if (route != 1) continue;
                        k2 = prev_cap;
                    }
                    const CellT<V>& p = prev_row[k2];
                    if (a.ok && p.ok && a.value + p.value == remaining) {
                        backtrack(kids[v][j], compress_mask(t, mask), k1, selected,
                                  witness);
                        s &= ~t;
                        k = k2;
                        remaining = p.value;
                        found = true;
                        break;
                    }
                }
            }
            assert(found);
            (void)found;
        }
        assert(s == 0);
    }
};

// Least common multiple of the weight denominators, or 0 when scaling to
// integers could overflow and the fold has to stay in rationals.
long long common_weight_scale(const Dag& g) {
    long long scale = 1;
    for (const Edge& e : g.edges()) {
        const long long den = e.weight.denominator();
        const long long common = std::gcd(scale, den);
        const __int128 lcm = static_cast<__int128>(scale) / common * den;
        if (lcm > (1LL << 31)) return 0;
        scale = static_cast<long long>(lcm);
    }
    __int128 magnitude = 0;
    for (const Edge& e : g.edges()) {
        const long long num = e.weight.numerator();
        magnitude += static_cast<__int128>(num < 0 ? -num : num) *
                     (scale / e.weight.denominator());
        if (magnitude > (static_cast<__int128>(1) << 62)) return 0;
    }
    return scale;
}

template <class V, class Conv, class Back>
BudgetedResult run_budgeted(const Network& net, bool maxtree, int route, long long broot,
                            std::vector<long long> vertex_cost, std::vector<int> parent,
                            Conv conv, Back back) {
    BudgetedEngine<V> engine(net, maxtree, route, broot, std::move(vertex_cost),
                             std::move(parent), conv);
    engine.fill();

    const int root = engine.ext.root();
    const long long b_query = std::min(engine.cap[root], broot);
    const CellT<V>& answer = engine.tab[root][0][b_query];
    assert(answer.ok);

    BudgetedResult result;
    result.value = back(answer.value);
    std::vector<char> selected(net.dag().vertex_count(), 0);
    engine.backtrack(root, 0, b_query, selected, result.witness_edges);
    for (int leaf : net.leaves())
        if (selected[leaf]) result.taxa.push_back(leaf);
    std::sort(result.taxa.begin(), result.taxa.end());
    std::sort(result.witness_edges.begin(), result.witness_edges.end());
    return result;
}

BudgetedResult solve_budgeted(const Network& net, const CostTable& costs, long long budget,
                              const std::vector<int>& extension_parent, bool maxtree,
                              int forced_route = 0) {
    const Dag& g = net.dag();
    std::vector<long long> vertex_cost(g.vertex_count(), 0);
    long long total = 0;
    for (int leaf : net.leaves()) {
        auto it = costs.find(net.taxon(leaf));
        if (it == costs.end())
            throw cost_error(cost_error::MissingTaxon, "missing cost for " + net.taxon(leaf));
        vertex_cost[leaf] = it->second;
        total += it->second;
    }
    long long b = std::max<long long>(0, std::min(budget, total));
    const long long b_bar = total - b;
    const int route = forced_route != 0 ? forced_route : (b <= b_bar ? 1 : 2);

    // Validate the raw extension before touching it, then re-hang leaves.
    TreeExtension::build(g, extension_parent);
    std::vector<int> parent = normalize_leaf_positions(g, extension_parent);

    const long long broot = route == 1 ? b : b_bar;
    const long long scale = common_weight_scale(g);
    if (scale != 0)
        return run_budgeted<long long>(
            net, maxtree, route, broot, std::move(vertex_cost), std::move(parent),
            [scale](const Rational& r) {
                return r.numerator() * (scale / r.denominator());
            },
            [scale](long long v) { return Rational(v, scale); });
    return run_budgeted<Rational>(
        net, maxtree, route, broot, std::move(vertex_cost), std::move(parent),
        [](const Rational& r) { return r; }, [](const Rational& r) { return r; });
}

}  // namespace

BudgetedResult solve_b_map_pd(const Network& net, const CostTable& costs, long long budget,
                              const std::vector<int>& extension_parent) {
    BudgetedResult result = solve_budgeted(net, costs, budget, extension_parent, false);
    result.witness_edges.clear();
    return result;
}

BudgetedResult solve_b_maxtree_pd(const Network& net, const CostTable& costs,
                                  long long budget,
                                  const std::vector<int>& extension_parent) {
    return solve_budgeted(net, costs, budget, extension_parent, true);
}

BudgetedResult solve_budgeted_forced(const Network& net, const CostTable& costs,
                                     long long budget,
                                     const std::vector<int>& extension_parent,
                                     bool maxtree, int route) {
    return solve_budgeted(net, costs, budget, extension_parent, maxtree, route);
}

Restriction restrict_to_ancestors(const Network& net, const TaxonSet& taxa,
                                  const std::vector<int>& parent) {
    const Dag& g = net.dag();
    const int n = g.vertex_count();
    std::vector<char> keep(n, 0);
    std::vector<int> stack;
    for (int leaf : taxa) {
        keep[leaf] = 1;
        stack.push_back(leaf);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.in_edge_ids(v)) {
            int u = g.edge(e).tail;
            if (!keep[u]) {
                keep[u] = 1;
                stack.push_back(u);
            }
        }
    }
    std::vector<int> new_id(n, -1);
    std::vector<int> vertex_of;
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        new_id[v] = static_cast<int>(vertex_of.size());
        vertex_of.push_back(v);
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (keep[e.tail] && keep[e.head])
            edges.push_back({new_id[e.tail], new_id[e.head], e.weight});

    // Project the extension: climb the parent chain past removed vertices.
    std::vector<int> sub_parent(vertex_of.size(), -1);
    for (size_t i = 0; i < vertex_of.size(); ++i) {
        int p = parent[vertex_of[i]];
        while (p != -1 && !keep[p]) p = parent[p];
        sub_parent[i] = p == -1 ? -1 : new_id[p];
    }
    return Restriction{Dag(static_cast<int>(vertex_of.size()), std::move(edges),
                           std::move(labels)),
                       std::move(vertex_of), std::move(sub_parent)};
}

namespace {

struct MinCell {
    bool ok = false;
    Rational value{0};
};

void improve_min(MinCell& cell, const Rational& candidate) {
    if (!cell.ok || candidate < cell.value) {
        cell.ok = true;
        cell.value = candidate;
    }
}

struct MinTreeEngine {
    const Dag& g;
    TreeExtension ext;

    std::vector<std::vector<int>> bag, universe;
    std::vector<unsigned> vbit, bag_in_universe;
    std::vector<std::vector<unsigned>> child_masks;
    // tab[v][Z over bag positions][rank of Y within Z]
    std::vector<std::vector<std::vector<MinCell>>> tab;

    MinTreeEngine(const Dag& g, std::vector<int> parent)
        : g(g), ext(TreeExtension::build(g, std::move(parent))) {
        const int n = g.vertex_count();
        bag.resize(n);
        universe.resize(n);
        vbit.assign(n, 0);
        bag_in_universe.assign(n, 0);
        child_masks.resize(n);
        tab.resize(n);
        for (int v = 0; v < n; ++v) {
            bag[v] = ext.bag_vertices(v);
            universe[v] = bag[v];
            universe[v].insert(
                std::upper_bound(universe[v].begin(), universe[v].end(), v), v);
            if (universe[v].size() > 25)
                throw std::runtime_error("extension width too large for the min-tree DP");
        }
        for (int v = 0; v < n; ++v) {
            auto bit_of = [&](int u) {
                auto it = std::lower_bound(universe[v].begin(), universe[v].end(), u);
                assert(it != universe[v].end() && *it == u);
                return 1u << (it - universe[v].begin());
            };
            vbit[v] = bit_of(v);
            for (int u : bag[v]) bag_in_universe[v] |= bit_of(u);
            for (int w : ext.children(v)) {
                unsigned mask = 0;
                for (int u : bag[w]) mask |= bit_of(u);
                child_masks[v].push_back(mask);
            }
        }
    }

    // min-plus fold over the extension children of v for a fixed root set.
    std::vector<MinCell> fold(int v, unsigned z_u) const {
        const size_t nmask = size_t(1) << universe[v].size();
        std::vector<MinCell> cur(nmask);
        cur[0] = {true, Rational(0)};
        const auto& kids = ext.children(v);
        for (size_t j = 0; j < kids.size(); ++j) {
            const unsigned mask = child_masks[v][j];
            const unsigned zc = compress_mask(z_u & mask, mask);
            const std::vector<MinCell>& child_row = tab[kids[j]][zc];
            std::vector<MinCell> next(nmask);
            unsigned y = z_u;
            while (true) {
                const unsigned part = y & mask;
                unsigned t = part;
                while (true) {
                    const MinCell& a = child_row[compress_mask(compress_mask(t, mask), zc)];
                    const MinCell& b = cur[y & ~t];
                    if (a.ok && b.ok) improve_min(next[y], a.value + b.value);
                    if (t == 0) break;
                    t = (t - 1) & part;
                }
                if (y == 0) break;
                y = (y - 1) & z_u;
            }
            cur = std::move(next);
        }
        return cur;
    }

    void fill() {
        for (int v : ext.bottom_up_order()) {
            if (g.out_degree(v) == 0) {
                // GW of a leaf is its single parent.
                tab[v].assign(2, {});
                tab[v][0].assign(1, MinCell{});  // no root available: infeasible
                const Rational w = g.edge(g.in_edge_ids(v).front()).weight;
                tab[v][1].assign(2, MinCell{true, w});
                continue;
            }
            const int bag_bits = static_cast<int>(bag[v].size());
            tab[v].assign(size_t(1) << bag_bits, {});
            for (unsigned z = 0; z < tab[v].size(); ++z) {
                const unsigned z_u = expand_mask(z, bag_in_universe[v]);
                const std::vector<MinCell> plain = fold(v, z_u);
                const std::vector<MinCell> with_v = fold(v, z_u | vbit[v]);
                tab[v][z].assign(size_t(1) << __builtin_popcount(z), MinCell{});
                unsigned y = z_u;
                while (true) {
                    MinCell cell = plain[y];
                    for (int e : g.in_edge_ids(v)) {
                        auto it = std::lower_bound(universe[v].begin(), universe[v].end(),
                                                   g.edge(e).tail);
                        const unsigned pbit = 1u << (it - universe[v].begin());
                        if (!(z_u & pbit)) continue;
                        const MinCell& inner = with_v[(y & ~pbit) | vbit[v]];
                        if (inner.ok) improve_min(cell, g.edge(e).weight + inner.value);
                    }
                    tab[v][z][compress_mask(compress_mask(y, bag_in_universe[v]), z)] = cell;
                    if (y == 0) break;
                    y = (y - 1) & z_u;
                }
            }
        }
    }

    Rational answer() const {
        const int root = ext.root();
        const std::vector<MinCell> cells = fold(root, vbit[root]);
        if (!cells[0].ok)
            throw std::logic_error("min-tree table has no feasible root entry");
        return cells[0].value;
    }
};

}  // namespace

Rational compute_min_tree_pd(const Network& net, const TaxonSet& taxa,
                             const std::vector<int>& extension_parent) {
    if (taxa.empty()) throw empty_taxon_set();
    TreeExtension::build(net.dag(), extension_parent);
    Restriction r = restrict_to_ancestors(net, taxa, extension_parent);
    std::vector<int> parent = normalize_leaf_positions(r.sub, r.parent);
    MinTreeEngine engine(r.sub, std::move(parent));
    engine.fill();
    return engine.answer();
}

}  // namespace nswpd
