#include <doctest.h>

#include "fixtures.hpp"
#include "nswpd/extension.hpp"
#include "nswpd/oracle.hpp"

using namespace nswpd;

TEST_CASE("reference switching values") {
    Network net = fixtures::fig1();
    TaxonSet abd = make_taxon_set(net, {"A", "B", "D"});
    CHECK(brute_pd_max(net, abd) == Rational(30));
    CHECK(brute_pd_min(net, abd) == Rational(28));
}

TEST_CASE("switching min never exceeds max") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        std::mt19937_64 rng(seed);
        TaxonSet taxa = fixtures::random_taxa(net, rng);
        CHECK(brute_pd_min(net, taxa) <= brute_pd_max(net, taxa));
        CHECK(brute_pd_max(net, taxa) <= pd_map_value(net, taxa));
    }
}

TEST_CASE("trees have a single switching") {
    Network net = gen_network(6, 0, 5);
    std::mt19937_64 rng(5);
    TaxonSet taxa = fixtures::random_taxa(net, rng);
    Rational map = pd_map_value(net, taxa);
    CHECK(brute_pd_max(net, taxa) == map);
    CHECK(brute_pd_min(net, taxa) == map);
}

TEST_CASE("switching cap aborts loudly") {
    Network net = fixtures::fig1();  // three in-degree-2 reticulations
    TaxonSet abd = make_taxon_set(net, {"A", "B", "D"});
    CHECK_THROWS_AS(brute_pd_max(net, abd, 4), too_many_switchings);
    CHECK(brute_pd_max(net, abd, 8) == Rational(30));
}

TEST_CASE("budgeted enumeration basics") {
    Network net = fixtures::fig1();
    CostTable costs = unit_costs(net);
    SUBCASE("zero budget") {
        BruteBudgetedResult r = brute_budgeted(net, costs, 0, BudgetedVariant::Map);
        CHECK(r.value == Rational(0));
        CHECK(r.taxa.empty());
    }
    SUBCASE("full budget") {
        BruteBudgetedResult r = brute_budgeted(net, costs, 6, BudgetedVariant::Map);
        CHECK(r.value == net.total_weight());
        CHECK(r.taxa == net.leaves());
    }
}

TEST_CASE("exhaustive extension search") {
    SUBCASE("tree") {
        Network net = gen_network(3, 0, 9);  // five vertices
        ExhaustiveNswResult r = exhaustive_nsw(net.dag());
        CHECK(r.width == 1);
        CHECK(is_tree_extension(net.dag(), r.parent));
        CHECK(nsw_of(net.dag(), r.parent) == 1);
    }
    SUBCASE("diamond") {
        std::vector<Edge> edges = {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}};
        CHECK(exhaustive_nsw(Dag(4, edges)).width == 2);
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(exhaustive_nsw(Dag(8, {})), too_many_vertices);
    }
}
