#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nswpd/exact.hpp"
#include "nswpd/oracle.hpp"
#include "nswpd/pd.hpp"

using namespace nswpd;

namespace {

std::vector<int> extension_of(const Network& net) {
    return nsw_pipeline(net.dag()).extension.parent_map();
}

long long cost_of(const Network& net, const CostTable& costs, const TaxonSet& taxa) {
    long long total = 0;
    for (int leaf : taxa) total += costs.at(net.taxon(leaf));
    return total;
}

// Cost 1 on the wanted taxa and budget+1 on the rest pins the optimum.
CostTable pinning_costs(const Network& net, const std::vector<std::string>& wanted,
                        long long budget) {
    CostTable costs;
    for (int leaf : net.leaves()) costs[net.taxon(leaf)] = budget + 1;
    for (const std::string& name : wanted) costs[name] = 1;
    return costs;
}

}  // namespace

TEST_CASE("reference values on the six-taxon fixture") {
    Network net = fixtures::fig1();
    std::vector<int> parent = extension_of(net);
    CostTable costs = pinning_costs(net, {"A", "B", "D"}, 3);

    BudgetedResult map = solve_b_map_pd(net, costs, 3, parent);
    CHECK(map.value == Rational(41));
    CHECK(map.taxa == make_taxon_set(net, {"A", "B", "D"}));

    BudgetedResult max = solve_b_maxtree_pd(net, costs, 3, parent);
    CHECK(max.value == Rational(30));
    CHECK(max.taxa == make_taxon_set(net, {"A", "B", "D"}));

    CHECK(compute_min_tree_pd(net, make_taxon_set(net, {"A", "B", "D"}), parent) ==
          Rational(28));
}

TEST_CASE("full budget takes everything") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Network net = fixtures::small_network(seed);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> parent = extension_of(net);
        long long total = total_cost(costs);
        BudgetedResult map = solve_b_map_pd(net, costs, total, parent);
        CHECK(map.value == net.total_weight());
        CHECK(map.taxa == net.leaves());
        // budgets beyond the total cost clamp
        CHECK(solve_b_map_pd(net, costs, total + 100, parent).value == net.total_weight());
    }
}

TEST_CASE("zero budget with positive costs selects nothing") {
    Network net = fixtures::fig1();
    CostTable costs = unit_costs(net);
    std::vector<int> parent = extension_of(net);
    BudgetedResult map = solve_b_map_pd(net, costs, 0, parent);
    CHECK(map.value == Rational(0));
    CHECK(map.taxa.empty());
    BudgetedResult max = solve_b_maxtree_pd(net, costs, 0, parent);
    CHECK(max.value == Rational(0));
    CHECK(max.taxa.empty());
}

TEST_CASE("zero-cost taxa are free") {
    Network net = fixtures::fig1();
    CostTable costs;
    for (int leaf : net.leaves()) costs[net.taxon(leaf)] = 0;
    std::vector<int> parent = extension_of(net);
    BudgetedResult map = solve_b_map_pd(net, costs, 0, parent);
    CHECK(map.value == net.total_weight());
    CHECK(map.taxa == net.leaves());
}

TEST_CASE("budgeted solvers match the subset oracle") {
    for (uint64_t seed = 200; seed < 230; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> parent = extension_of(net);
        long long total = total_cost(costs);
        for (long long budget : {0ll, total / 3, total / 2, total}) {
            CAPTURE(seed);
            CAPTURE(budget);
            BudgetedResult map = solve_b_map_pd(net, costs, budget, parent);
            CHECK(map.value == brute_budgeted(net, costs, budget, BudgetedVariant::Map).value);
            CHECK(map.value == pd_map_value(net, map.taxa));
            CHECK(cost_of(net, costs, map.taxa) <= budget);

            BudgetedResult max = solve_b_maxtree_pd(net, costs, budget, parent);
            CHECK(max.value ==
                  brute_budgeted(net, costs, budget, BudgetedVariant::MaxTree).value);
            CHECK(cost_of(net, costs, max.taxa) <= budget);
            if (!max.taxa.empty()) CHECK(max.value == brute_pd_max(net, max.taxa));
        }
    }
}

TEST_CASE("max-tree witness is a forest achieving the value") {
    for (uint64_t seed = 300; seed < 320; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> parent = extension_of(net);
        long long budget = total_cost(costs) / 2;
        BudgetedResult max = solve_b_maxtree_pd(net, costs, budget, parent);
        const Dag& g = net.dag();
        Rational weight(0);
        std::vector<int> in_count(g.vertex_count(), 0);
        for (int e : max.witness_edges) {
            weight += g.edge(e).weight;
            ++in_count[g.edge(e).head];
        }
        CHECK(weight == max.value);
        // at most one incoming edge per vertex: the witness is a branching
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(in_count[v] <= 1);
        // no cycles can exist in a sub-DAG; a branching sub-DAG is a forest
        for (int leaf : max.taxa) {
            bool covered = max.taxa.empty();
            for (int e : max.witness_edges)
                if (g.edge(e).head == leaf) covered = true;
            if (!max.witness_edges.empty()) CHECK(covered);
        }
    }
}

TEST_CASE("budget monotonicity") {
    for (uint64_t seed = 400; seed < 415; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> parent = extension_of(net);
        long long total = total_cost(costs);
        Rational prev_map(-1), prev_max(-1);
        for (long long budget = 0; budget <= total; ++budget) {
            Rational map = solve_b_map_pd(net, costs, budget, parent).value;
            Rational max = solve_b_maxtree_pd(net, costs, budget, parent).value;
            CHECK(map >= prev_map);
            CHECK(max >= prev_max);
            prev_map = map;
            prev_max = max;
        }
    }
}

TEST_CASE("forcing either table route gives equal optima") {
    for (uint64_t seed = 500; seed < 515; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> parent = extension_of(net);
        long long total = total_cost(costs);
        for (long long budget : {0ll, total / 4, total / 2, 3 * total / 4, total}) {
            for (bool maxtree : {false, true}) {
                Rational direct =
                    solve_budgeted_forced(net, costs, budget, parent, maxtree, 1).value;
                Rational complement =
                    solve_budgeted_forced(net, costs, budget, parent, maxtree, 2).value;
                CHECK(direct == complement);
            }
        }
    }
}

TEST_CASE("all three measures coincide on trees") {
    for (uint64_t seed = 600; seed < 615; ++seed) {
        Network net = gen_network(2 + seed % 7, 0, seed);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> parent = extension_of(net);
        long long budget = total_cost(costs) / 2;
        BudgetedResult map = solve_b_map_pd(net, costs, budget, parent);
        BudgetedResult max = solve_b_maxtree_pd(net, costs, budget, parent);
        CHECK(map.value == max.value);
        std::mt19937_64 rng(seed);
        TaxonSet taxa = fixtures::random_taxa(net, rng);
        CHECK(compute_min_tree_pd(net, taxa, parent) == pd_map_value(net, taxa));
    }
}

TEST_CASE("measure ordering on random subsets") {
    for (uint64_t seed = 700; seed < 730; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        std::vector<int> parent = extension_of(net);
        std::mt19937_64 rng(seed);
        TaxonSet taxa = fixtures::random_taxa(net, rng);
        Rational min = compute_min_tree_pd(net, taxa, parent);
        Rational max = brute_pd_max(net, taxa);
        Rational map = pd_map_value(net, taxa);
        CHECK(min <= max);
        CHECK(max <= map);
    }
}

TEST_CASE("min-tree matches the switching oracle") {
    for (uint64_t seed = 800; seed < 840; ++seed) {
        Network net = fixtures::small_network(seed, 7, 4);
        std::vector<int> parent = extension_of(net);
        std::mt19937_64 rng(seed);
        TaxonSet taxa = fixtures::random_taxa(net, rng);
        CAPTURE(seed);
        CHECK(compute_min_tree_pd(net, taxa, parent) == brute_pd_min(net, taxa));
    }
}

TEST_CASE("min-tree rejects the empty set") {
    Network net = fixtures::fig1();
    std::vector<int> parent = extension_of(net);
    CHECK_THROWS_AS(compute_min_tree_pd(net, {}, parent), empty_taxon_set);
}

TEST_CASE("optima do not depend on the extension") {
    for (uint64_t seed = 900; seed < 920; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        CostTable costs = fixtures::small_costs(net, seed);
        std::vector<int> exact = extension_of(net);
        std::vector<int> greedy = heuristic_extension(net.dag()).extension.parent_map();
        if (exact == greedy) continue;
        long long budget = total_cost(costs) / 2;
        CHECK(solve_b_map_pd(net, costs, budget, exact).value ==
              solve_b_map_pd(net, costs, budget, greedy).value);
        CHECK(solve_b_maxtree_pd(net, costs, budget, exact).value ==
              solve_b_maxtree_pd(net, costs, budget, greedy).value);
        std::mt19937_64 rng(seed);
        TaxonSet taxa = fixtures::random_taxa(net, rng);
        CHECK(compute_min_tree_pd(net, taxa, exact) ==
              compute_min_tree_pd(net, taxa, greedy));
    }
}

TEST_CASE("invalid extensions are rejected") {
    Network net = fixtures::fig1();
    std::vector<int> parent = extension_of(net);
    std::vector<int> broken = parent;
    // re-root somewhere inconsistent
    for (size_t v = 0; v < broken.size(); ++v)
        if (broken[v] == -1) broken[v] = static_cast<int>((v + 1) % broken.size());
    CHECK_THROWS_AS(solve_b_map_pd(net, unit_costs(net), 2, broken), extension_error);
}

TEST_CASE("restriction keeps exactly the ancestors of the set") {
    for (uint64_t seed = 950; seed < 965; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        std::vector<int> parent = extension_of(net);
        std::mt19937_64 rng(seed);
        TaxonSet taxa = fixtures::random_taxa(net, rng);
        Restriction res = restrict_to_ancestors(net, taxa, parent);
        CHECK(is_tree_extension(res.sub, res.parent));
        CHECK(nsw_of(res.sub, res.parent) <= nsw_of(net.dag(), parent));
        // every surviving vertex reaches a member of the set
        const Dag& g = net.dag();
        std::vector<char> reaches(g.vertex_count(), 0);
        for (int leaf : taxa) reaches[leaf] = 1;
        for (auto it = g.topological_order().rbegin(); it != g.topological_order().rend();
             ++it)
            for (int child : g.children(*it))
                if (reaches[child]) reaches[*it] = 1;
        std::vector<char> kept(g.vertex_count(), 0);
        for (int orig : res.vertex_of) kept[orig] = 1;
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(kept[v] == reaches[v]);
    }
    SUBCASE("the full set is the identity") {
        Network net = fixtures::fig1();
        std::vector<int> parent = extension_of(net);
        Restriction res = restrict_to_ancestors(net, net.leaves(), parent);
        CHECK(res.sub.vertex_count() == net.dag().vertex_count());
        CHECK(res.sub.edge_count() == net.dag().edge_count());
    }
}

TEST_CASE("leaf normalization keeps validity and width") {
    for (uint64_t seed = 970; seed < 985; ++seed) {
        Network net = fixtures::small_network(seed, 6, 3);
        std::vector<int> parent = extension_of(net);
        std::vector<int> normalized = normalize_leaf_positions(net.dag(), parent);
        CHECK(is_tree_extension(net.dag(), normalized));
        CHECK(nsw_of(net.dag(), normalized) <= nsw_of(net.dag(), parent));
        // network leaves have no children in the normalized extension
        for (int leaf : net.leaves())
            for (size_t v = 0; v < normalized.size(); ++v)
                CHECK(normalized[v] != leaf);
    }
}
