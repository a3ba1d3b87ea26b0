#include "nswpd/extension.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nswpd {

namespace {

// Checks the rooted-tree part: exactly one -1, everything reaches the root.
bool is_rooted_tree(int n, const std::vector<int>& parent, int* root_out) {
    if (static_cast<int>(parent.size()) != n) return false;
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (parent[v] == -1) {
            if (root != -1) return false;
            root = v;
        } else if (parent[v] < 0 || parent[v] >= n || parent[v] == v) {
            return false;
        }
    }
    if (root == -1 && n > 0) return false;
    // Walk up from each vertex; cycle detection via step budget.
    for (int v = 0; v < n; ++v) {
        int cur = v;
        int steps = 0;
        while (cur != root) {
            cur = parent[cur];
            if (++steps > n) return false;
        }
    }
    if (root_out) *root_out = root;
    return true;
}

}  // namespace

bool is_tree_extension(const Dag& g, const std::vector<int>& parent) {
    const int n = g.vertex_count();
    int root = -1;
    if (!is_rooted_tree(n, parent, &root)) return false;
    // Depth array lets us test ancestry by walking up from the deeper vertex.
    std::vector<int> depth(n, -1);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (depth[v] != -1) continue;
        int cur = v;
        while (cur != -1 && depth[cur] == -1) {
            stack.push_back(cur);
            cur = parent[cur];
        }
        int base = cur == -1 ? -1 : depth[cur];
        while (!stack.empty()) {
            depth[stack.back()] = ++base;
            stack.pop_back();
        }
    }
    auto is_ancestor = [&](int u, int v) {
        while (depth[v] > depth[u]) v = parent[v];
        return v == u;
    };
    for (const Edge& e : g.edges())
        if (!is_ancestor(e.tail, e.head)) return false;
    return true;
}

std::vector<int> bag(const Dag& g, const std::vector<int>& parent, int v) {
    const int n = g.vertex_count();
    // Subtree below v.
    std::vector<char> in_subtree(n, 0);
    std::vector<std::vector<int>> kids(n);
    for (int u = 0; u < n; ++u)
        if (parent[u] != -1) kids[parent[u]].push_back(u);
    std::vector<int> stack{v};
    in_subtree[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : kids[u])
            if (!in_subtree[w]) { in_subtree[w] = 1; stack.push_back(w); }
    }
    std::vector<char> in_bag(n, 0);
    for (const Edge& e : g.edges())
        if (in_subtree[e.head] && !in_subtree[e.tail]) in_bag[e.tail] = 1;
    std::vector<int> result;
    for (int u = 0; u < n; ++u)
        if (in_bag[u]) result.push_back(u);
    return result;
}

int nsw_of(const Dag& g, const std::vector<int>& parent) {
    int width = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        width = std::max(width, static_cast<int>(bag(g, parent, v).size()));
    return width;
}

TreeExtension TreeExtension::build(const Dag& g, std::vector<int> parent) {
    if (!is_tree_extension(g, parent))
        throw extension_error("parent map is not a tree-extension of the graph");
    TreeExtension ext;
    const int n = g.vertex_count();
    ext.parent_ = std::move(parent);
    ext.children_.resize(n);
    for (int v = 0; v < n; ++v) {
        if (ext.parent_[v] == -1)
            ext.root_ = v;
        else
            ext.children_[ext.parent_[v]].push_back(v);
    }
    if (n == 0) return ext;
    // Iterative post-order; bags accumulate bottom-up as union of child
    // subtree-parents, then drop everything inside the subtree.
    ext.post_order_.reserve(n);
    std::vector<std::pair<int, size_t>> stack{{ext.root_, 0}};
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < ext.children_[v].size()) {
            int child = ext.children_[v][idx++];
            stack.push_back({child, 0});
        } else {
            ext.post_order_.push_back(v);
            stack.pop_back();
        }
    }
    ext.bags_.assign(n, Bitset(n));
    std::vector<Bitset> subtree(n, Bitset(n));
    for (int v : ext.post_order_) {
        Bitset inside(n);
        inside.set(v);
        Bitset outside_parents(n);
        for (int child : ext.children_[v]) {
            inside |= subtree[child];
            outside_parents |= ext.bags_[child];
        }
        for (int e : g.in_edge_ids(v)) outside_parents.set(g.edge(e).tail);
        // Remove members that ended up inside the subtree (at most v itself:
        // bags of children only contain v or vertices outside v's subtree).
        outside_parents.reset(v);
        ext.bags_[v] = outside_parents;
        subtree[v] = inside;
        ext.width_ = std::max(ext.width_, outside_parents.count());
    }
    return ext;
}

namespace {

std::string vertex_name(const Dag& g, int v) {
    if (!g.label(v).empty()) return g.label(v);
    return "v" + std::to_string(v);
}

}  // namespace

std::string serialize_extension(const Dag& g, const std::vector<int>& parent) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << vertex_name(g, v) << '\t'
            << (parent[v] == -1 ? std::string("-") : vertex_name(g, parent[v])) << '\n';
    }
    return out.str();
}

std::vector<int> parse_extension(const Dag& g, const std::string& text) {
    std::map<std::string, int> by_name;
    for (int v = 0; v < g.vertex_count(); ++v) by_name[vertex_name(g, v)] = v;
    auto resolve = [&](const std::string& name) {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw extension_error("unknown vertex name: " + name);
        return it->second;
    };
    std::vector<int> parent(g.vertex_count(), -2);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw extension_error("line " + std::to_string(lineno) + ": expected child<TAB>parent");
        int child = resolve(line.substr(0, tab));
        std::string parent_name = line.substr(tab + 1);
        if (parent[child] != -2)
            throw extension_error("duplicate entry for vertex " + line.substr(0, tab));
        parent[child] = parent_name == "-" ? -1 : resolve(parent_name);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (parent[v] == -2)
            throw extension_error("missing entry for vertex " + vertex_name(g, v));
    return parent;
}

}  // namespace nswpd
