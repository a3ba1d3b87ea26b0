#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nswpd/exact.hpp"
#include "nswpd/extension.hpp"

using namespace nswpd;

namespace {

// Directed path graph 0 -> 1 -> ... -> n-1.
Dag path_dag(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return Dag(n, std::move(edges));
}

}  // namespace

TEST_CASE("a directed tree is its own extension") {
    Network net = gen_network(5, 0, 11);
    const Dag& g = net.dag();
    std::vector<int> parent(g.vertex_count(), -1);
    for (const Edge& e : g.edges()) parent[e.head] = e.tail;
    CHECK(is_tree_extension(g, parent));
    CHECK(nsw_of(g, parent) == 1);
}

TEST_CASE("reversing one ancestor relation breaks the extension") {
    Dag g = path_dag(3);
    CHECK(is_tree_extension(g, {-1, 0, 1}));
    CHECK_FALSE(is_tree_extension(g, {1, -1, 1}));   // tail below its head
    CHECK_FALSE(is_tree_extension(g, {-1, 0, 0}));   // 1 not an ancestor of 2
    CHECK_FALSE(is_tree_extension(g, {-1, 0}));      // wrong size
    CHECK_FALSE(is_tree_extension(g, {-1, -1, 1}));  // two roots
    CHECK_FALSE(is_tree_extension(g, {-1, 2, 1}));   // cycle below the root
}

TEST_CASE("bags by definition") {
    Network net = fixtures::fig1();
    const Dag& g = net.dag();
    NswResult result = nsw_pipeline(g);
    const std::vector<int>& parent = result.extension.parent_map();
    SUBCASE("leaf bags are the leaf's parents") {
        for (int leaf : net.leaves()) {
            std::vector<int> b = bag(g, parent, leaf);
            CHECK(b == g.parents(leaf));
        }
    }
    SUBCASE("the root bag is empty") {
        CHECK(bag(g, parent, result.extension.root()).empty());
    }
    SUBCASE("cached bags equal recomputed bags") {
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(result.extension.bag_vertices(v) == bag(g, parent, v));
    }
}

TEST_CASE("cached bags equal recomputed bags on random dags") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 25; ++round) {
        Dag g = fixtures::random_dag(8, 0.4, rng);
        NswResult result = optimal_extension_exact(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(result.extension.bag_vertices(v) ==
                  bag(g, result.extension.parent_map(), v));
        }
        CHECK(result.extension.width() == nsw_of(g, result.extension.parent_map()));
    }
}

TEST_CASE("width floor is the maximum in-degree") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 25; ++round) {
        Dag g = fixtures::random_dag(7, 0.5, rng);
        int max_in = 0;
        for (int v = 0; v < g.vertex_count(); ++v) max_in = std::max(max_in, g.in_degree(v));
        NswResult result = optimal_extension_exact(g);
        CHECK(result.width >= max_in);
    }
}

TEST_CASE("edgeless and tree widths") {
    Dag isolated(5, {});
    std::vector<int> star = {-1, 0, 0, 0, 0};
    CHECK(is_tree_extension(isolated, star));
    CHECK(nsw_of(isolated, star) == 0);

    Dag path = path_dag(4);
    CHECK(nsw_of(path, {-1, 0, 1, 2}) == 1);
}

TEST_CASE("extension text format round trip") {
    Network net = fixtures::fig1();
    std::vector<int> parent = nsw_pipeline(net.dag()).extension.parent_map();
    std::string text = serialize_extension(net.dag(), parent);
    CHECK(parse_extension(net.dag(), text) == parent);
    CHECK(serialize_extension(net.dag(), parse_extension(net.dag(), text)) == text);
}

TEST_CASE("extension parser rejects corrupt input") {
    Network net = fixtures::fig1();
    std::vector<int> parent = nsw_pipeline(net.dag()).extension.parent_map();
    std::string text = serialize_extension(net.dag(), parent);
    CHECK_THROWS_AS(parse_extension(net.dag(), "A\tnosuch\n"), extension_error);
    CHECK_THROWS_AS(parse_extension(net.dag(), text + "A\tB\n"), extension_error);
    CHECK_THROWS_AS(parse_extension(net.dag(), "garbage"), extension_error);
}

TEST_CASE("build rejects non-extensions") {
    Dag g = path_dag(3);
    CHECK_THROWS_AS(TreeExtension::build(g, {-1, 0, 0}), extension_error);
    CHECK_THROWS_AS(TreeExtension::build(g, {-1, -1, 1}), extension_error);
}
