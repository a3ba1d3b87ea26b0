#include <doctest.h>

#include "fixtures.hpp"
#include "nswpd/exact.hpp"
#include "nswpd/oracle.hpp"

using namespace nswpd;

TEST_CASE("trees and diamonds") {
    Network tree = gen_network(6, 0, 2);
    CHECK(optimal_extension_exact(tree.dag()).width == 1);
    CHECK(heuristic_extension(tree.dag()).width == 1);
    CHECK(nsw_pipeline(tree.dag()).width == 1);

    std::vector<Edge> edges = {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}};
    Dag diamond(4, edges);
    CHECK(optimal_extension_exact(diamond).width == 2);
    CHECK(heuristic_extension(diamond).width == 2);
}

TEST_CASE("empty and edgeless graphs") {
    CHECK(optimal_extension_exact(Dag(0, {})).width == 0);
    CHECK(optimal_extension_exact(Dag(4, {})).width == 0);
    CHECK(nsw_pipeline(Dag(4, {})).width == 0);
}

TEST_CASE("reference seven-vertex value") {
    Dag g = fixtures::fig3();
    CHECK(optimal_extension_exact(g).width == 3);
    CHECK(nsw_pipeline(g).width == 3);
    CHECK(exhaustive_nsw(g).width == 3);
}

TEST_CASE("exact matches the exhaustive oracle on small dags") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
        int n = 4 + static_cast<int>(rng() % 4);
        Dag g = fixtures::random_dag(n, 0.4, rng);
        NswResult exact = optimal_extension_exact(g);
        CHECK(exact.width == exhaustive_nsw(g).width);
        CHECK(is_tree_extension(g, exact.extension.parent_map()));
        CHECK(nsw_of(g, exact.extension.parent_map()) == exact.width);
    }
}

TEST_CASE("heuristic upper-bounds the optimum") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Network net = fixtures::small_network(seed);
        NswResult greedy = heuristic_extension(net.dag());
        NswResult exact = optimal_extension_exact(net.dag());
        CHECK(is_tree_extension(net.dag(), greedy.extension.parent_map()));
        CHECK(greedy.width >= exact.width);
    }
}

TEST_CASE("pipeline equals plain exact on generated networks") {
    for (uint64_t seed = 100; seed < 140; ++seed) {
        Network net = fixtures::small_network(seed);
        NswResult pipe = nsw_pipeline(net.dag());
        CHECK(is_tree_extension(net.dag(), pipe.extension.parent_map()));
        CHECK(pipe.width == optimal_extension_exact(net.dag()).width);
    }
}

TEST_CASE("upper bound handling") {
    Dag g = fixtures::fig3();
    NswOptions tight;
    tight.upper_bound = 2;
    CHECK_THROWS_AS(optimal_extension_exact(g, tight), bound_exceeded);
    CHECK_THROWS_AS(nsw_pipeline(g, tight), bound_exceeded);
    NswOptions loose;
    loose.upper_bound = 3;
    CHECK(optimal_extension_exact(g, loose).width == 3);
    CHECK(nsw_pipeline(g, loose).width == 3);
}

TEST_CASE("deleting an edge never increases the optimum") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 20; ++round) {
        Dag g = fixtures::random_dag(7, 0.4, rng);
        if (g.edge_count() == 0) continue;
        int w = optimal_extension_exact(g).width;
        size_t drop = rng() % g.edge_count();
        std::vector<Edge> edges;
        for (size_t e = 0; e < static_cast<size_t>(g.edge_count()); ++e)
            if (e != drop) edges.push_back(g.edge(static_cast<int>(e)));
        Dag smaller(g.vertex_count(), std::move(edges));
        CHECK(optimal_extension_exact(smaller).width <= w);
    }
}

TEST_CASE("table limit guard") {
    NswOptions options;
    options.max_table_entries = 2;
    Dag g = fixtures::fig3();
    CHECK_THROWS_AS(optimal_extension_exact(g, options), table_limit_exceeded);
}
