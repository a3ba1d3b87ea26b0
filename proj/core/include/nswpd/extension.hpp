#ifndef NSWPD_EXTENSION_HPP
#define NSWPD_EXTENSION_HPP

#include <string>
#include <vector>

#include "nswpd/bitset.hpp"
#include "nswpd/graph.hpp"

namespace nswpd {

// True iff `parent` describes a rooted tree on all vertices of g (parent[v] ==
// -1 exactly for the root) in which every DAG edge's tail is an ancestor of
// its head.
bool is_tree_extension(const Dag& g, const std::vector<int>& parent);

// Bag of v recomputed from scratch: DAG-parents of the subtree below v that
// lie outside that subtree. Testing/oracle path; TreeExtension caches bags.
std::vector<int> bag(const Dag& g, const std::vector<int>& parent, int v);

// Max bag size of the given extension.
int nsw_of(const Dag& g, const std::vector<int>& parent);

// Tree-extension with cached per-vertex bags (bitsets over vertex ids).
class TreeExtension {
public:
    static TreeExtension build(const Dag& g, std::vector<int> parent);

    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& parent_map() const { return parent_; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    const Bitset& bag_bits(int v) const { return bags_[v]; }
    std::vector<int> bag_vertices(int v) const { return bags_[v].to_vector(); }
    int width() const { return width_; }

    // Vertices ordered children-before-parents (post-order of the tree).
    const std::vector<int>& bottom_up_order() const { return post_order_; }

private:
    TreeExtension() = default;
    int root_ = -1;
    int width_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<Bitset> bags_;
    std::vector<int> post_order_;
};

class extension_error : public std::runtime_error {
public:
    explicit extension_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text format: one `child<TAB>parent` line per vertex in ascending child
// order, `-` as the parent of the root. Vertices are named by taxon label
// where present and by their numeric id otherwise.
std::string serialize_extension(const Dag& g, const std::vector<int>& parent);
std::vector<int> parse_extension(const Dag& g, const std::string& text);

}  // namespace nswpd

#endif
