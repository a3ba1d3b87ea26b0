#include "nswpd/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace nswpd {

Dag::Dag(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (labels_.empty()) labels_.resize(vertex_count_);
    if (static_cast<int>(labels_.size()) != vertex_count_)
        throw std::invalid_argument("label vector size mismatch");
    out_.resize(vertex_count_);
    in_.resize(vertex_count_);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (ed.tail < 0 || ed.tail >= vertex_count_ || ed.head < 0 || ed.head >= vertex_count_)
            throw std::invalid_argument("edge endpoint out of range");
        out_[ed.tail].push_back(e);
        in_[ed.head].push_back(e);
    }
    // Kahn's algorithm; doubles as the cycle check.
    std::vector<int> indeg(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) indeg[v] = in_degree(v);
    std::vector<int> stack;
    for (int v = 0; v < vertex_count_; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    topo_.reserve(vertex_count_);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        topo_.push_back(v);
        for (int e : out_[v])
            if (--indeg[edges_[e].head] == 0) stack.push_back(edges_[e].head);
    }
    if (static_cast<int>(topo_.size()) != vertex_count_)
        throw validation_error(validation_error::CyclicInput, "input graph contains a cycle");
}

std::vector<int> Dag::children(int v) const {
    std::vector<int> out;
    out.reserve(out_[v].size());
    for (int e : out_[v]) out.push_back(edges_[e].head);
    return out;
}

std::vector<int> Dag::parents(int v) const {
    std::vector<int> out;
    out.reserve(in_[v].size());
    for (int e : in_[v]) out.push_back(edges_[e].tail);
    return out;
}

int Dag::max_out_degree() const {
    int best = 0;
    for (int v = 0; v < vertex_count_; ++v) best = std::max(best, out_degree(v));
    return best;
}

Rational Dag::total_weight() const {
    Rational total(0);
    for (const Edge& e : edges_) total += e.weight;
    return total;
}

namespace {

bool weakly_connected(const Dag& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.out_edge_ids(v)) {
            int w = g.edge(e).head;
            if (!seen[w]) { seen[w] = 1; ++reached; stack.push_back(w); }
        }
        for (int e : g.in_edge_ids(v)) {
            int w = g.edge(e).tail;
            if (!seen[w]) { seen[w] = 1; ++reached; stack.push_back(w); }
        }
    }
    return reached == n;
}

}  // namespace

Network Network::validate(Dag dag, bool strict_reticulations) {
    const int n = dag.vertex_count();
    if (n == 0)
        throw validation_error(validation_error::BadDegree, "empty graph");
    if (!weakly_connected(dag))
        throw validation_error(validation_error::NotConnected, "network must be weakly connected");
    int root = -1;
    std::vector<int> leaves;
    std::set<std::string> used_labels;
    bool strict = true;
    for (int v = 0; v < n; ++v) {
        const int din = dag.in_degree(v);
        const int dout = dag.out_degree(v);
        if (din == 0) {
            if (root != -1)
                throw validation_error(validation_error::MultipleRoots,
                                       "more than one in-degree-0 vertex");
            root = v;
            if (dout < 2)
                throw validation_error(validation_error::BadDegree,
                                       "root out-degree " + std::to_string(dout) + " < 2");
        } else if (dout == 0) {
            if (din != 1)
                throw validation_error(validation_error::BadDegree,
                                       "leaf " + std::to_string(v) + " has in-degree " +
                                           std::to_string(din));
            if (dag.label(v).empty())
                throw validation_error(validation_error::UnlabeledLeaf,
                                       "leaf " + std::to_string(v) + " has no taxon label");
            if (!used_labels.insert(dag.label(v)).second)
                throw validation_error(validation_error::DuplicateLabel,
                                       "duplicate taxon label " + dag.label(v));
            leaves.push_back(v);
        } else if (din == 1) {
            if (dout < 2)
                throw validation_error(validation_error::BadDegree,
                                       "vertex " + std::to_string(v) +
                                           " is a chain vertex (in 1, out 1)");
        } else {
            // reticulation
            if (dout != 1)
                throw validation_error(validation_error::BadDegree,
                                       "reticulation " + std::to_string(v) + " has out-degree " +
                                           std::to_string(dout));
            if (din > 2) {
                strict = false;
                if (strict_reticulations)
                    throw validation_error(validation_error::BadDegree,
                                           "reticulation " + std::to_string(v) +
                                               " has in-degree " + std::to_string(din));
            }
        }
    }
    if (root == -1)
        throw validation_error(validation_error::CyclicInput, "no root found");
    for (const Edge& e : dag.edges())
        if (e.weight < Rational(0))
            throw validation_error(validation_error::NegativeWeight, "negative edge weight");
    // Parallel edges would make degree bookkeeping ambiguous.
    std::set<std::pair<int, int>> seen_edges;
    for (const Edge& e : dag.edges())
        if (!seen_edges.insert({e.tail, e.head}).second)
            throw validation_error(validation_error::BadDegree,
                                   "parallel edge " + std::to_string(e.tail) + "->" +
                                       std::to_string(e.head));
    return Network(std::move(dag), root, std::move(leaves), strict);
}

int Network::leaf_by_taxon(const std::string& name) const {
    for (int v : leaves_)
        if (dag_.label(v) == name) return v;
    throw std::out_of_range("unknown taxon: " + name);
}

TaxonSet make_taxon_set(const Network& net, const std::vector<std::string>& names) {
    TaxonSet set;
    set.reserve(names.size());
    for (const std::string& name : names) set.push_back(net.leaf_by_taxon(name));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

std::vector<int> offspring_edges(const Network& net, const TaxonSet& taxa) {
    const Dag& g = net.dag();
    // Mark ancestors of the selected leaves by walking edges backwards.
    std::vector<char> marked(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int leaf : taxa) {
        if (!marked[leaf]) { marked[leaf] = 1; stack.push_back(leaf); }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.in_edge_ids(v)) {
            int u = g.edge(e).tail;
            if (!marked[u]) { marked[u] = 1; stack.push_back(u); }
        }
    }
    std::vector<int> result;
    for (int e = 0; e < g.edge_count(); ++e)
        if (marked[g.edge(e).head]) result.push_back(e);
    return result;
}

Rational pd_map_value(const Network& net, const TaxonSet& taxa) {
    Rational total(0);
    for (int e : offspring_edges(net, taxa)) total += net.dag().edge(e).weight;
    return total;
}

namespace {

// Biconnected components of the underlying undirected graph (edge partition).
struct BiconnectedFinder {
    const Dag& g;
    std::vector<int> depth, low;
    std::vector<char> visited;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> components;  // edge ids per component

    explicit BiconnectedFinder(const Dag& g)
        : g(g), depth(g.vertex_count(), 0), low(g.vertex_count(), 0),
          visited(g.vertex_count(), 0) {}

    void run() {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!visited[v]) dfs(v, -1, 0);
    }

    void dfs(int v, int parent_edge, int d) {
        visited[v] = 1;
        depth[v] = low[v] = d;
        auto relax = [&](int e, int w) {
            if (!visited[w]) {
                edge_stack.push_back(e);
                dfs(w, e, d + 1);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= depth[v]) pop_component(e);
            } else if (e != parent_edge && depth[w] < depth[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], depth[w]);
            }
        };
        for (int e : g.out_edge_ids(v)) relax(e, g.edge(e).head);
        for (int e : g.in_edge_ids(v)) relax(e, g.edge(e).tail);
    }

    void pop_component(int until_edge) {
        std::vector<int> comp;
        while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == until_edge) break;
        }
        components.push_back(std::move(comp));
    }
};

}  // namespace

int network_level(const Network& net) {
    BiconnectedFinder finder(net.dag());
    finder.run();
    int level = 0;
    for (const std::vector<int>& comp : finder.components) {
        std::set<int> vertices;
        for (int e : comp) {
            vertices.insert(net.dag().edge(e).tail);
            vertices.insert(net.dag().edge(e).head);
        }
        int excess = static_cast<int>(comp.size()) - static_cast<int>(vertices.size()) + 1;
        level = std::max(level, excess);
    }
    return level;
}

}  // namespace nswpd
