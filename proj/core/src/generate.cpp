#include "nswpd/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nswpd {

namespace {

struct RawEdge {
    int tail, head;
};

bool reachable(const std::vector<RawEdge>& edges, int vertex_count, int from, int to) {
    if (from == to) return true;
    std::vector<std::vector<int>> out(vertex_count);
    for (const RawEdge& e : edges) out[e.tail].push_back(e.head);
    std::vector<char> seen(vertex_count, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : out[v]) {
            if (w == to) return true;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace

Network gen_network(int n_leaves, int n_reticulations, uint64_t seed) {
    if (n_leaves < 2) throw infeasible_parameters("need at least two leaves");
    if (n_reticulations < 0) throw infeasible_parameters("negative reticulation count");
    std::mt19937_64 rng(seed);

    std::vector<RawEdge> edges{{0, 1}, {0, 2}};
    std::vector<int> leaves{1, 2};
    int nv = 3;
    while (static_cast<int>(leaves.size()) < n_leaves) {
        size_t i = std::uniform_int_distribution<size_t>(0, leaves.size() - 1)(rng);
        int v = leaves[i];
        edges.push_back({v, nv});
        edges.push_back({v, nv + 1});
        leaves[i] = nv;
        leaves.push_back(nv + 1);
        nv += 2;
    }

    int attempts = 100 * (n_reticulations + 1);
    int added = 0;
    while (added < n_reticulations) {
        if (attempts-- <= 0)
            throw infeasible_parameters("could not place all reticulations acyclically");
        size_t m = edges.size();
        size_t e1 = std::uniform_int_distribution<size_t>(0, m - 1)(rng);
        size_t e2 = std::uniform_int_distribution<size_t>(0, m - 1)(rng);
        if (e1 == e2) continue;
        auto [a, b] = edges[e1];
        auto [c, d] = edges[e2];
        // The cross edge runs from a subdivision of e1 to one of e2; any
        // cycle would have to close via a path from d back to a.
        if (reachable(edges, nv, d, a)) continue;
        int s = nv++;
        int t = nv++;
        edges[e1] = {a, s};
        edges[e2] = {c, t};
        edges.push_back({s, b});
        edges.push_back({t, d});
        edges.push_back({s, t});
        ++added;
    }

    std::vector<int> out_degree(nv, 0);
    for (const RawEdge& e : edges) ++out_degree[e.tail];
    std::vector<std::string> labels(nv);
    int taxon = 0;
    for (int v = 0; v < nv; ++v)
        if (out_degree[v] == 0) labels[v] = "t" + std::to_string(++taxon);

    std::uniform_int_distribution<int> weight_dist(1, 10);
    std::vector<Edge> weighted;
    for (const RawEdge& e : edges)
        weighted.push_back({e.tail, e.head, Rational(weight_dist(rng))});
    return Network::validate(Dag(nv, std::move(weighted), std::move(labels)));
}

CostTable sample_costs(const Network& net, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::lognormal_distribution<double> dist(2.0, 0.8);
    CostTable table;
    for (int leaf : net.leaves()) {
        long long cost = std::llround(dist(rng));
        table[net.taxon(leaf)] = std::max<long long>(1, cost);
    }
    return table;
}

Network contract_shortest(const Network& net, double fraction, uint64_t /*seed*/) {
    if (fraction < 0.0 || fraction >= 1.0)
        throw std::invalid_argument("fraction must be in [0, 1)");
    const Dag& g = net.dag();
    const int n = g.vertex_count();
    int target = static_cast<int>(std::ceil(fraction * g.edge_count()));

    std::vector<int> tail(g.edge_count()), head(g.edge_count());
    std::vector<Rational> weight(g.edge_count());
    std::vector<char> edge_alive(g.edge_count(), 1), vertex_alive(n, 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        tail[e] = g.edge(e).tail;
        head[e] = g.edge(e).head;
        weight[e] = g.edge(e).weight;
    }

    for (int done = 0; done < target; ++done) {
        std::vector<int> in_deg(n, 0), out_deg(n, 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!edge_alive[e]) continue;
            ++out_deg[tail[e]];
            ++in_deg[head[e]];
        }
        int best = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!edge_alive[e]) continue;
            int u = tail[e], v = head[e];
            if (in_deg[v] != 1 || out_deg[v] < 2) continue;  // only tree vertices go
            if (in_deg[u] >= 2) continue;  // reticulations must keep out-degree 1
            bool parallel = false;
            for (int f = 0; f < g.edge_count() && !parallel; ++f) {
                if (!edge_alive[f] || f == e || tail[f] != v) continue;
                for (int h = 0; h < g.edge_count(); ++h)
                    if (edge_alive[h] && tail[h] == u && head[h] == head[f]) {
                        parallel = true;
                        break;
                    }
            }
            if (parallel) continue;
            if (best == -1 || weight[e] < weight[best]) best = e;
        }
        if (best == -1) break;
        int u = tail[best], v = head[best];
        edge_alive[best] = 0;
        vertex_alive[v] = 0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (edge_alive[e] && tail[e] == v) tail[e] = u;
    }

    std::vector<int> new_id(n, -1);
    std::vector<std::string> labels;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (!vertex_alive[v]) continue;
        new_id[v] = next++;
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_alive[e]) edges.push_back({new_id[tail[e]], new_id[head[e]], weight[e]});
    return Network::validate(Dag(next, std::move(edges), std::move(labels)),
                             net.strict());
}

}  // namespace nswpd
