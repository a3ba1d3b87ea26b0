#include "nswpd/exact.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "nswpd/bitset.hpp"
#include "nswpd/reduce.hpp"

namespace nswpd {

namespace {

// Deduplicated neighbour lists; parallel edges would otherwise skew boundary
// counts.
struct Neighbourhood {
    std::vector<std::vector<int>> in, out;

    explicit Neighbourhood(const Dag& g) : in(g.vertex_count()), out(g.vertex_count()) {
        for (const Edge& e : g.edges()) {
            out[e.tail].push_back(e.head);
            in[e.head].push_back(e.tail);
        }
        for (auto* lists : {&in, &out})
            for (auto& l : *lists) {
                std::sort(l.begin(), l.end());
                l.erase(std::unique(l.begin(), l.end()), l.end());
            }
    }
};

// Weakly connected components of the vertices in `c`, each reported as a
// bitset, ordered by smallest member.
std::vector<Bitset> components_of(const Neighbourhood& nb, const Bitset& c, int n) {
    std::vector<char> seen(n, 0);
    std::vector<Bitset> result;
    for (int s : c.to_vector()) {
        if (seen[s]) continue;
        Bitset comp(n);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            auto visit = [&](int w) {
                if (c.test(w) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            };
            for (int w : nb.out[v]) visit(w);
            for (int w : nb.in[v]) visit(w);
        }
        result.push_back(std::move(comp));
    }
    return result;
}

struct SubsetSolver {
    const Dag& g;
    const Neighbourhood nb;
    const int n;
    const size_t max_entries;

    struct Entry {
        int value;
        bool exact;   // otherwise `value` is only a lower bound
        int choice;   // source removed first on an optimal branch
    };
    std::unordered_map<Bitset, Entry, BitsetHash> memo;

    SubsetSolver(const Dag& g, size_t max_entries)
        : g(g), nb(g), n(g.vertex_count()), max_entries(max_entries) {}

    // |N^-(C)|: distinct in-neighbours outside C, i.e. the bag at the top of
    // any extension of G[C].
    int boundary(const Bitset& c) const {
        Bitset outside(n);
        for (int v : c.to_vector())
            for (int u : nb.in[v])
                if (!c.test(u)) outside.set(u);
        return outside.count();
    }

    std::vector<int> sources(const Bitset& c) const {
        std::vector<int> result;
        for (int v : c.to_vector()) {
            bool source = true;
            for (int u : nb.in[v])
                if (c.test(u)) { source = false; break; }
            if (source) result.push_back(v);
        }
        return result;
    }

    void store(const Bitset& c, Entry entry) {
        if (memo.size() >= max_entries && !memo.count(c))
            throw table_limit_exceeded(max_entries);
        memo[c] = entry;
    }

    // Returns f(C) when the result is < ub (exact, memoised with a branch
    // choice); otherwise a lower bound proving f(C) >= ub.
    int solve(const Bitset& c, int ub) {
        int base = boundary(c);
        if (base >= ub) return base;
        auto it = memo.find(c);
        if (it != memo.end() && (it->second.exact || it->second.value >= ub))
            return it->second.value;
        std::vector<int> members = c.to_vector();
        if (members.size() == 1) {
            store(c, {base, true, members[0]});
            return base;
        }
        int best = INT_MAX;
        int best_choice = -1;
        for (int rho : sources(c)) {
            Bitset rest = c;
            rest.reset(rho);
            int limit = std::min(ub, best);
            int branch = base;
            for (const Bitset& comp : components_of(nb, rest, n)) {
                branch = std::max(branch, solve(comp, limit));
                if (branch >= limit) break;
            }
            if (branch < best) {
                best = branch;
                best_choice = rho;
            }
        }
        store(c, {best, best < ub, best_choice});
        return best;
    }

    // Requires solve(c, width + 1) to have produced an exact entry.
    void reconstruct(const Bitset& c, int width, int gamma_parent, std::vector<int>& parent) {
        solve(c, width + 1);
        int rho = memo.at(c).choice;
        parent[rho] = gamma_parent;
        Bitset rest = c;
        rest.reset(rho);
        for (const Bitset& comp : components_of(nb, rest, n))
            reconstruct(comp, width, rho, parent);
    }
};

}  // namespace

NswResult heuristic_extension(const Dag& g) {
    const int n = g.vertex_count();
    Neighbourhood nb(g);
    std::vector<int> parent(n, -2);

    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);

    auto boundary = [&](const Bitset& c) {
        Bitset outside(n);
        for (int v : c.to_vector())
            for (int u : nb.in[v])
                if (!c.test(u)) outside.set(u);
        return outside.count();
    };

    // Explicit stack of (component, parent-to-attach-to).
    std::vector<std::pair<Bitset, int>> work;
    int global_root = -1;
    for (const Bitset& comp : components_of(nb, all, n)) work.push_back({comp, -3});
    std::reverse(work.begin(), work.end());
    while (!work.empty()) {
        auto [c, gp] = work.back();
        work.pop_back();
        int best_rho = -1;
        int best_score = INT_MAX;
        std::vector<std::vector<Bitset>> comps_of_choice;
        for (int v : c.to_vector()) {
            bool source = true;
            for (int u : nb.in[v])
                if (c.test(u)) { source = false; break; }
            if (!source) continue;
            Bitset rest = c;
            rest.reset(v);
            std::vector<Bitset> comps = components_of(nb, rest, n);
            int score = 0;
            for (const Bitset& comp : comps) score = std::max(score, boundary(comp));
            if (score < best_score) {
                best_score = score;
                best_rho = v;
                comps_of_choice.clear();
                comps_of_choice.push_back(std::move(comps));
            }
        }
        if (gp == -3) {
            // Root of a weak component: first one becomes the overall root.
            gp = global_root == -1 ? -1 : global_root;
            if (global_root == -1) global_root = best_rho;
        }
        parent[best_rho] = gp;
        for (const Bitset& comp : comps_of_choice.front()) work.push_back({comp, best_rho});
    }
    TreeExtension ext = TreeExtension::build(g, std::move(parent));
    int width = ext.width();
    return NswResult{std::move(ext), width};
}

NswResult optimal_extension_exact(const Dag& g, const NswOptions& options) {
    const int n = g.vertex_count();
    if (n == 0) return NswResult{TreeExtension::build(g, {}), 0};
    int heuristic_width = heuristic_extension(g).width;
    int cap = heuristic_width;
    if (options.upper_bound) cap = std::min(cap, *options.upper_bound);

    SubsetSolver solver(g, options.max_table_entries);
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    std::vector<Bitset> comps = components_of(solver.nb, all, n);

    int width = 0;
    std::vector<int> widths;
    for (const Bitset& comp : comps) {
        int value = solver.solve(comp, cap + 1);
        if (value > cap) {
            // Only reachable when the caller's bound is below the optimum.
            throw bound_exceeded(options.upper_bound.value_or(cap));
        }
        widths.push_back(value);
        width = std::max(width, value);
    }
    if (options.upper_bound && width > *options.upper_bound)
        throw bound_exceeded(*options.upper_bound);

    std::vector<int> parent(n, -2);
    int global_root = -1;
    for (size_t i = 0; i < comps.size(); ++i) {
        std::vector<int> local(n, -2);
        solver.reconstruct(comps[i], widths[i], -1, local);
        int comp_root = -1;
        for (int v : comps[i].to_vector()) {
            parent[v] = local[v];
            if (local[v] == -1) comp_root = v;
        }
        if (global_root == -1)
            global_root = comp_root;
        else
            parent[comp_root] = global_root;
    }
    TreeExtension ext = TreeExtension::build(g, std::move(parent));
    return NswResult{std::move(ext), width};
}

namespace {

std::vector<int> pipeline_parent(const Dag& g, const NswOptions& options);

std::vector<int> pipeline_connected(const Dag& g, const NswOptions& options) {
    if (auto base = solve_base_case(g)) return std::move(base->parent);

    ChainReduction chains = suppress_chain_pairs(g);
    if (chains.reduced.vertex_count() < g.vertex_count()) {
        std::vector<int> reduced_parent = pipeline_parent(chains.reduced, options);
        std::vector<int> lifted(g.vertex_count(), -2);
        for (size_t v = 0; v < chains.vertex_of.size(); ++v) {
            int p = reduced_parent[v];
            lifted[chains.vertex_of[v]] = p == -1 ? -1 : chains.vertex_of[p];
        }
        return undo_chain_suppressions(chains.steps, std::move(lifted));
    }

    int source_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) == 0) ++source_count;
    if (source_count == 1) {
        if (auto pieces = split_at_cut_vertices(g)) {
            std::vector<std::vector<int>> piece_parents;
            for (const CutPiece& piece : *pieces)
                piece_parents.push_back(pipeline_connected(piece.piece, options));
            return merge_cut_pieces(g.vertex_count(), *pieces, piece_parents);
        }
    }

    NswOptions inner = options;
    inner.upper_bound.reset();  // the final width check rejects wide results
    return optimal_extension_exact(g, inner).extension.parent_map();
}

std::vector<int> pipeline_parent(const Dag& g, const NswOptions& options) {
    const int n = g.vertex_count();
    Neighbourhood nb(g);
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    std::vector<Bitset> comps = components_of(nb, all, n);
    if (comps.size() == 1) return pipeline_connected(g, options);

    std::vector<int> parent(n, -2);
    int global_root = -1;
    for (const Bitset& comp : comps) {
        std::vector<int> members = comp.to_vector();
        std::vector<int> local(n, -1);
        for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        std::vector<std::string> labels;
        for (int v : members) labels.push_back(g.label(v));
        for (const Edge& e : g.edges())
            if (comp.test(e.tail) && comp.test(e.head))
                edges.push_back({local[e.tail], local[e.head], e.weight});
        Dag sub(static_cast<int>(members.size()), std::move(edges), std::move(labels));
        std::vector<int> sub_parent = pipeline_connected(sub, options);
        int comp_root = -1;
        for (size_t i = 0; i < members.size(); ++i) {
            parent[members[i]] = sub_parent[i] == -1 ? -1 : members[sub_parent[i]];
            if (sub_parent[i] == -1) comp_root = members[i];
        }
        if (global_root == -1)
            global_root = comp_root;
        else
            parent[comp_root] = global_root;
    }
    return parent;
}

}  // namespace

NswResult nsw_pipeline(const Dag& g, const NswOptions& options) {
    std::vector<int> parent = pipeline_parent(g, options);
    TreeExtension ext = TreeExtension::build(g, std::move(parent));
    int width = ext.width();
    if (options.upper_bound && width > *options.upper_bound)
        throw bound_exceeded(*options.upper_bound);
    return NswResult{std::move(ext), width};
}

}  // namespace nswpd
