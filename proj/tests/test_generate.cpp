#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nswpd/generate.hpp"
#include "nswpd/newick.hpp"

using namespace nswpd;

TEST_CASE("cherry for the smallest parameters") {
    Network net = gen_network(2, 0, 123);
    CHECK(net.dag().vertex_count() == 3);
    CHECK(net.leaves().size() == 2);
}

TEST_CASE("generated networks validate across seeds") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        Network net = gen_network(20, 5, seed);
        CHECK(net.leaves().size() == 20);
        int retics = 0;
        for (int v = 0; v < net.dag().vertex_count(); ++v)
            if (net.is_reticulation(v)) ++retics;
        CHECK(retics == 5);
        CHECK(net.strict());
        for (const Edge& e : net.dag().edges()) {
            CHECK(e.weight >= Rational(1));
            CHECK(e.weight <= Rational(10));
            CHECK(e.weight.denominator() == 1);
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    Network a = gen_network(12, 3, 99);
    Network b = gen_network(12, 3, 99);
    CHECK(serialize_enewick(a) == serialize_enewick(b));
    Network c = gen_network(12, 3, 100);
    CHECK(serialize_enewick(a) != serialize_enewick(c));
    CHECK(sample_costs(a, 7) == sample_costs(b, 7));
}

TEST_CASE("generator rejects impossible parameters") {
    CHECK_THROWS_AS(gen_network(1, 0, 1), infeasible_parameters);
    CHECK_THROWS_AS(gen_network(5, -1, 1), infeasible_parameters);
}

TEST_CASE("sampled costs are positive integers with the right median") {
    Network net = gen_network(100, 0, 42);
    std::vector<long long> draws;
    for (uint64_t seed = 0; draws.size() < 10000; ++seed) {
        CostTable costs = sample_costs(net, seed);
        for (const auto& [taxon, cost] : costs) {
            CHECK(cost >= 1);
            draws.push_back(cost);
        }
    }
    draws.resize(10000);
    std::sort(draws.begin(), draws.end());
    double median = (draws[4999] + draws[5000]) / 2.0;
    double expected = std::exp(2.0);
    CHECK(median >= 0.9 * expected);
    CHECK(median <= 1.1 * expected);
}

TEST_CASE("contraction") {
    SUBCASE("fraction zero is the identity") {
        Network net = gen_network(10, 2, 5);
        Network same = contract_shortest(net, 0.0, 5);
        CHECK(serialize_enewick(same) == serialize_enewick(net));
    }
    SUBCASE("binary trees go non-binary and keep validating") {
        for (uint64_t seed = 1; seed <= 30; ++seed) {
            Network net = gen_network(15, 0, seed);
            Network contracted = contract_shortest(net, 0.10, seed);
            CHECK(contracted.leaves().size() == net.leaves().size());
            CHECK(contracted.dag().vertex_count() < net.dag().vertex_count());
            CHECK(contracted.dag().max_out_degree() >= net.dag().max_out_degree());
        }
    }
    SUBCASE("networks keep validating") {
        int widened = 0;
        for (uint64_t seed = 31; seed <= 80; ++seed) {
            Network net = gen_network(12, 4, seed);
            Network contracted = contract_shortest(net, 0.10, seed);
            CHECK(contracted.leaves().size() == net.leaves().size());
            if (contracted.dag().max_out_degree() > net.dag().max_out_degree()) ++widened;
        }
        CHECK(widened > 0);
    }
}
