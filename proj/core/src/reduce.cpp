#include "nswpd/reduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace nswpd {

namespace {

struct MutableGraph {
    std::vector<std::set<int>> out, in;
    std::vector<char> alive;

    explicit MutableGraph(const Dag& g)
        : out(g.vertex_count()), in(g.vertex_count()), alive(g.vertex_count(), 1) {
        for (const Edge& e : g.edges()) {
            out[e.tail].insert(e.head);
            in[e.head].insert(e.tail);
        }
    }

    bool chain(int v) const { return alive[v] && in[v].size() == 1 && out[v].size() == 1; }
};

}  // namespace

ChainReduction suppress_chain_pairs(const Dag& g) {
    MutableGraph m(g);
    const int n = g.vertex_count();
    std::vector<ChainSuppression> steps;
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!m.chain(v)) continue;
        int w = *m.out[v].begin();
        if (!m.chain(w)) continue;
        int p = *m.in[v].begin();
        m.out[p].erase(v);
        m.in[w].erase(v);
        m.out[v].clear();
        m.in[v].clear();
        m.alive[v] = 0;
        m.out[p].insert(w);
        m.in[w].insert(p);
        steps.push_back({v, w});
        queue.push_back(p);
        queue.push_back(w);
    }
    std::vector<int> vertex_of;
    std::vector<int> new_id(n, -1);
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
        if (!m.alive[v]) continue;
        new_id[v] = static_cast<int>(vertex_of.size());
        vertex_of.push_back(v);
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        if (m.alive[v])
            for (int w : m.out[v]) edges.push_back({new_id[v], new_id[w], Rational(0)});
    return ChainReduction{Dag(static_cast<int>(vertex_of.size()), std::move(edges),
                              std::move(labels)),
                          std::move(vertex_of), std::move(steps)};
}

std::vector<int> undo_chain_suppressions(const std::vector<ChainSuppression>& steps,
                                         std::vector<int> parent) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->child < 0 || it->child >= static_cast<int>(parent.size()) ||
            parent[it->child] == -2)
            throw inconsistent_trace("chain undo references a vertex that is not placed");
        parent[it->vertex] = parent[it->child];
        parent[it->child] = it->vertex;
    }
    for (size_t v = 0; v < parent.size(); ++v)
        if (parent[v] == -2)
            throw inconsistent_trace("vertex " + std::to_string(v) + " left unplaced");
    return parent;
}

namespace {

// Articulation points of the underlying undirected graph; assumes weak
// connectivity is checked by the caller.
struct Articulation {
    const Dag& g;
    std::vector<int> depth, low;
    std::vector<char> visited, is_cut;

    explicit Articulation(const Dag& g)
        : g(g), depth(g.vertex_count()), low(g.vertex_count()),
          visited(g.vertex_count(), 0), is_cut(g.vertex_count(), 0) {}

    void run(int start) { dfs(start, -1, 0); }

    std::vector<std::pair<int, int>> neighbors(int v) const {
        std::vector<std::pair<int, int>> result;  // (edge id, other endpoint)
        for (int e : g.out_edge_ids(v)) result.push_back({e, g.edge(e).head});
        for (int e : g.in_edge_ids(v)) result.push_back({e, g.edge(e).tail});
        return result;
    }

    void dfs(int v, int parent_edge, int d) {
        visited[v] = 1;
        depth[v] = low[v] = d;
        int root_children = 0;
        for (auto [e, w] : neighbors(v)) {
            if (e == parent_edge) continue;
            if (visited[w]) {
                low[v] = std::min(low[v], depth[w]);
            } else {
                dfs(w, e, d + 1);
                low[v] = std::min(low[v], low[w]);
                if (d > 0 && low[w] >= d) is_cut[v] = 1;
                ++root_children;
            }
        }
        if (d == 0 && root_children >= 2) is_cut[v] = 1;
    }
};

std::vector<std::vector<int>> undirected_components_without(const Dag& g, int removed) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> components;
    for (int s = 0; s < n; ++s) {
        if (s == removed || comp[s] != -1) continue;
        int id = static_cast<int>(components.size());
        components.push_back({});
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            components[id].push_back(v);
            auto visit = [&](int w) {
                if (w != removed && comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            };
            for (int e : g.out_edge_ids(v)) visit(g.edge(e).head);
            for (int e : g.in_edge_ids(v)) visit(g.edge(e).tail);
        }
    }
    return components;
}

}  // namespace

std::optional<std::vector<CutPiece>> split_at_cut_vertices(const Dag& g) {
    const int n = g.vertex_count();
    int source = -1;
    for (int v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) {
            if (source != -1) throw not_single_source();
            source = v;
        }
    }
    if (source == -1) throw not_single_source();
    if (n < 3) return std::nullopt;
    Articulation art(g);
    art.run(source);
    for (int v = 0; v < n; ++v)
        if (!art.visited[v]) throw not_single_source();  // not connected
    int cut = -1;
    for (int v = 0; v < n; ++v)
        if (art.is_cut[v]) { cut = v; break; }
    if (cut == -1) return std::nullopt;

    std::vector<std::vector<int>> components = undirected_components_without(g, cut);
    std::vector<CutPiece> pieces;
    for (std::vector<int>& comp : components) {
        comp.push_back(cut);
        std::sort(comp.begin(), comp.end());
        std::vector<int> local(n, -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        std::vector<std::string> labels;
        for (int v : comp) labels.push_back(g.label(v));
        for (const Edge& e : g.edges())
            if (local[e.tail] != -1 && local[e.head] != -1)
                edges.push_back({local[e.tail], local[e.head], e.weight});
        pieces.push_back(CutPiece{Dag(static_cast<int>(comp.size()), std::move(edges),
                                      std::move(labels)),
                                  comp, local[cut]});
    }
    return pieces;
}

std::vector<int> merge_cut_pieces(int vertex_count, const std::vector<CutPiece>& pieces,
                                  const std::vector<std::vector<int>>& piece_parents) {
    if (pieces.size() != piece_parents.size())
        throw inconsistent_trace("piece/extension count mismatch");
    std::vector<int> parent(vertex_count, -2);
    for (size_t i = 0; i < pieces.size(); ++i) {
        const CutPiece& piece = pieces[i];
        const std::vector<int>& local_parent = piece_parents[i];
        if (local_parent.size() != piece.vertex_of.size())
            throw inconsistent_trace("piece extension has wrong size");
        for (size_t u = 0; u < local_parent.size(); ++u) {
            int orig = piece.vertex_of[u];
            int p = local_parent[u];
            if (static_cast<int>(u) == piece.shared && p == -1)
                continue;  // the cut vertex may be another piece's interior
            int orig_parent = p == -1 ? -1 : piece.vertex_of[p];
            if (parent[orig] != -2 && parent[orig] != orig_parent)
                throw inconsistent_trace("conflicting parents for vertex " +
                                         std::to_string(orig));
            parent[orig] = orig_parent;
        }
    }
    int roots = 0;
    for (int v = 0; v < vertex_count; ++v) {
        if (parent[v] == -2) parent[v] = -1;  // cut vertex rooted in every piece
        if (parent[v] == -1) ++roots;
    }
    if (roots != 1) throw inconsistent_trace("merged extension is not a single tree");
    return parent;
}

std::optional<BaseSolution> solve_base_case(const Dag& g) {
    const int n = g.vertex_count();
    if (n == 0) return BaseSolution{{}, 0};
    if (g.edge_count() == 0) {
        std::vector<int> parent(n, 0);
        parent[0] = -1;
        return BaseSolution{std::move(parent), 0};
    }
    // Directed tree: every in-degree <= 1, single root, connected.
    {
        bool tree = true;
        int roots = 0;
        for (int v = 0; v < n; ++v) {
            if (g.in_degree(v) > 1) { tree = false; break; }
            if (g.in_degree(v) == 0) ++roots;
        }
        if (tree && roots == 1 && g.edge_count() == n - 1) {
            std::vector<int> parent(n, -1);
            for (const Edge& e : g.edges()) parent[e.head] = e.tail;
            return BaseSolution{std::move(parent), g.edge_count() > 0 ? 1 : 0};
        }
    }
    // Biconnected graph with exactly one reticulation: any topological path.
    {
        int reticulation = -1;
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if (g.in_degree(v) >= 2) {
                reticulation = v;
                ++count;
            }
        }
        if (count == 1) {
            int start = -1;
            for (int v = 0; v < n; ++v)
                if (g.in_degree(v) == 0) { start = v; break; }
            if (start != -1) {
                Articulation art(g);
                art.run(start);
                bool connected = true, biconnected = true;
                for (int v = 0; v < n; ++v) {
                    if (!art.visited[v]) connected = false;
                    if (art.is_cut[v]) biconnected = false;
                }
                if (connected && biconnected) {
                    const std::vector<int>& topo = g.topological_order();
                    std::vector<int> parent(n);
                    parent[topo[0]] = -1;
                    for (int i = 1; i < n; ++i) parent[topo[i]] = topo[i - 1];
                    return BaseSolution{std::move(parent), g.in_degree(reticulation)};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace nswpd
