#ifndef NSWPD_TESTS_FIXTURES_HPP
#define NSWPD_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "nswpd/generate.hpp"
#include "nswpd/graph.hpp"
#include "nswpd/newick.hpp"

namespace fixtures {

using namespace nswpd;

// Six-taxon fish network with three reticulations; the reference values for
// {A,B,D} are PDmap 41, PDmax 30, PDmin 28.
// ids: 0 root, 1-3 top-level branches, 4-9 internal, 10-15 leaves A..F.
inline Network fig1() {
    std::vector<Edge> edges = {
        {0, 1, 3},  {0, 2, 3},  {0, 3, 3},   // root fan-out
        {1, 10, 1}, {1, 4, 4},                // left branch: A and a reticulation
        {4, 11, 6},                           // reticulation above B
        {2, 5, 1},  {2, 6, 4},                // middle branch
        {5, 4, 3},  {5, 7, 2},
        {7, 12, 2}, {7, 8, 5},                // C and the reticulation above D
        {6, 8, 5},  {6, 9, 1},
        {8, 13, 4},
        {9, 14, 3},                           // reticulation above E
        {3, 9, 4},  {3, 15, 1},               // right branch: E's second parent and F
    };
    std::vector<std::string> labels(16);
    labels[10] = "A";
    labels[11] = "B";
    labels[12] = "C";
    labels[13] = "D";
    labels[14] = "E";
    labels[15] = "F";
    return Network::validate(Dag(16, std::move(edges), std::move(labels)));
}

inline std::string fig1_text() {
    return "((A:1,(B:6)#H1:4):3,((#H1:3,(C:2,(D:4)#H2:5):2):1,"
           "(#H2:5,(E:3)#H3:1):4):3,(#H3:4,F:1):3);";
}

// Seven-vertex DAG whose scanwidth is 3; the vertex below the single-child
// source must not be treated as a suppressible chain pair.
// ids: 0 a (root), 1 b, 2 u, 3 v, 4 e, 5 x1, 6 x2.
inline Dag fig3() {
    std::vector<Edge> edges = {{0, 1, 0}, {0, 2, 0}, {0, 4, 0}, {1, 3, 0},
                               {1, 5, 0}, {2, 3, 0}, {3, 4, 0}, {4, 6, 0}};
    std::vector<std::string> labels(7);
    labels[5] = "x1";
    labels[6] = "x2";
    return Dag(7, std::move(edges), std::move(labels));
}

inline std::string fig3_text() { return "((((x2)#H2)#H1,x1),(#H1),#H2);"; }

// Random DAG on n vertices: edge i->j (i < j) with the given probability.
inline Dag random_dag(int n, double edge_prob, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(0, 5);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) edges.push_back({i, j, weight(rng)});
    return Dag(n, std::move(edges));
}

inline Network small_network(uint64_t seed, int max_leaves = 8, int max_retics = 4) {
    std::mt19937_64 rng(seed);
    int leaves = std::uniform_int_distribution<int>(2, max_leaves)(rng);
    int retics = std::uniform_int_distribution<int>(0, max_retics)(rng);
    return gen_network(leaves, retics, seed);
}

// Per-taxon costs bounded by `max_cost`, deterministic per seed.
inline CostTable small_costs(const Network& net, uint64_t seed, long long max_cost = 9) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<long long> dist(1, max_cost);
    CostTable costs;
    for (int leaf : net.leaves()) costs[net.taxon(leaf)] = dist(rng);
    return costs;
}

// Non-empty random taxon subset.
inline TaxonSet random_taxa(const Network& net, std::mt19937_64& rng) {
    TaxonSet taxa;
    while (taxa.empty()) {
        taxa.clear();
        for (int leaf : net.leaves())
            if (rng() % 2 == 0) taxa.push_back(leaf);
    }
    return taxa;
}

}  // namespace fixtures

#endif
