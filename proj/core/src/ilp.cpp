#include "nswpd/ilp.hpp"

#include <sstream>

#include "nswpd/extension.hpp"

namespace nswpd {

namespace {

std::string xv(int u, int v) { return "x_" + std::to_string(u) + "_" + std::to_string(v); }
std::string yv(int u, int v) { return "y_" + std::to_string(u) + "_" + std::to_string(v); }
std::string zv(int u, int v) { return "z_" + std::to_string(u) + "_" + std::to_string(v); }
std::string av(int u, int v, int w) {
    return "a_" + std::to_string(u) + "_" + std::to_string(v) + "_" + std::to_string(w);
}

}  // namespace

IlpModel build_ilp(const Dag& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> has_edge(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) has_edge[e.tail][e.head] = 1;

    IlpModel model;
    auto add = [&](std::string name, std::vector<LinTerm> terms, Rel rel, long long rhs) {
        model.constraints.push_back({std::move(name), std::move(terms), rel, rhs});
    };

    // s bounds every bag size.
    for (int v = 0; v < n; ++v) {
        std::vector<LinTerm> terms{{1, "s"}};
        for (int u = 0; u < n; ++u) terms.push_back({-1, zv(u, v)});
        add("gw_" + std::to_string(v), std::move(terms), Rel::Ge, 0);
    }
    // Input edges force reachability in the extension.
    for (const Edge& e : g.edges())
        add("reach_" + std::to_string(e.tail) + "_" + std::to_string(e.head),
            {{1, yv(e.tail, e.head)}}, Rel::Ge, 1);
    // u lies in the bag of v when u is above v, some w is below v, and uw is
    // an input edge; the delta term is folded into the right-hand side. The
    // reflexive case u = v is excluded: a vertex is never in its own bag.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            for (int w = 0; w < n; ++w)
                add("bagdef_" + std::to_string(u) + "_" + std::to_string(v) + "_" +
                        std::to_string(w),
                    {{1, zv(u, v)}, {-1, yv(u, v)}, {-1, yv(v, w)}}, Rel::Ge,
                    has_edge[u][w] ? -1 : -2);
        }
    // |V|-1 edges with in-degree at most one and no 2-cycles: a tree.
    {
        std::vector<LinTerm> terms;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) terms.push_back({1, xv(u, v)});
        add("treeedges", std::move(terms), Rel::Eq, n - 1);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<LinTerm> terms;
        for (int u = 0; u < n; ++u) terms.push_back({1, xv(u, v)});
        add("treein_" + std::to_string(v), std::move(terms), Rel::Le, 1);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                add("acyc_" + std::to_string(u) + "_" + std::to_string(v),
                    {{1, yv(u, v)}, {1, yv(v, u)}}, Rel::Le, 1);
    // Linearization of y_u_w = max_v y_u_v * x_v_w.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                std::string suffix = "_" + std::to_string(u) + "_" + std::to_string(v) +
                                     "_" + std::to_string(w);
                add("adef" + suffix, {{1, av(u, v, w)}, {-1, yv(u, v)}, {-1, xv(v, w)}},
                    Rel::Ge, -1);
                if (u != w) add("a1" + suffix, {{1, yv(u, w)}, {-1, av(u, v, w)}}, Rel::Ge, 0);
                add("a3" + suffix, {{1, av(u, v, w)}, {-1, yv(u, v)}}, Rel::Le, 0);
                add("a4" + suffix, {{1, av(u, v, w)}, {-1, xv(v, w)}}, Rel::Le, 0);
            }
    // Non-root vertices need a witnessing last step; reflexive y is pinned
    // instead, since no witness exists for the root.
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w) continue;
            std::vector<LinTerm> terms{{1, yv(u, w)}};
            for (int v = 0; v < n; ++v) terms.push_back({-1, av(u, v, w)});
            add("a2_" + std::to_string(u) + "_" + std::to_string(w), std::move(terms),
                Rel::Le, 0);
        }

    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            model.binaries.push_back(xv(u, v));
            model.binaries.push_back(yv(u, v));
            model.binaries.push_back(zv(u, v));
            for (int w = 0; w < n; ++w) model.binaries.push_back(av(u, v, w));
        }
    model.generals.push_back("s");
    for (int v = 0; v < n; ++v) {
        model.fixed.push_back({yv(v, v), 1});
        model.fixed.push_back({xv(v, v), 0});
    }
    return model;
}

std::string emit_ilp(const Dag& g) {
    IlpModel model = build_ilp(g);
    std::ostringstream out;
    out << "\\ node scanwidth of a tree-extension\n";
    out << "Minimize\n obj: " << model.objective << "\n";
    out << "Subject To\n";
    for (const Constraint& c : model.constraints) {
        out << ' ' << c.name << ':';
        for (const LinTerm& t : c.terms) {
            out << (t.coeff < 0 ? " - " : " + ");
            long long mag = t.coeff < 0 ? -t.coeff : t.coeff;
            if (mag != 1) out << mag << ' ';
            out << t.var;
        }
        switch (c.rel) {
            case Rel::Le: out << " <= "; break;
            case Rel::Ge: out << " >= "; break;
            case Rel::Eq: out << " = "; break;
        }
        out << c.rhs << '\n';
    }
    out << "Bounds\n";
    for (const auto& [var, value] : model.fixed) out << ' ' << var << " = " << value << '\n';
    out << " s >= 0\n";
    out << "Binary\n";
    for (const std::string& var : model.binaries) out << ' ' << var << '\n';
    out << "General\n " << model.objective << "\nEnd\n";
    return out.str();
}

Assignment encode_extension(const Dag& g, const std::vector<int>& parent) {
    const int n = g.vertex_count();
    TreeExtension ext = TreeExtension::build(g, parent);

    std::vector<std::vector<char>> x(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        if (ext.parent(v) != -1) x[ext.parent(v)][v] = 1;
    // Reflexive-transitive closure along the tree.
    std::vector<std::vector<char>> y(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        for (int a = v; a != -1; a = ext.parent(a)) y[a][v] = 1;
    }
    std::vector<std::vector<char>> z(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int u : ext.bag_vertices(v)) z[u][v] = 1;

    Assignment assignment;
    assignment["s"] = ext.width();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            assignment["x_" + std::to_string(u) + "_" + std::to_string(v)] = x[u][v];
            assignment["y_" + std::to_string(u) + "_" + std::to_string(v)] = y[u][v];
            assignment["z_" + std::to_string(u) + "_" + std::to_string(v)] = z[u][v];
            for (int w = 0; w < n; ++w)
                assignment["a_" + std::to_string(u) + "_" + std::to_string(v) + "_" +
                           std::to_string(w)] = y[u][v] && x[v][w];
        }
    return assignment;
}

CheckResult check_assignment(const IlpModel& model, const Assignment& assignment) {
    auto value = [&](const std::string& var) {
        auto it = assignment.find(var);
        if (it == assignment.end()) throw missing_variable(var);
        return it->second;
    };

    CheckResult result{true, {}, value(model.objective)};
    auto flag = [&](const std::string& name) {
        result.feasible = false;
        result.violated.push_back(name);
    };

    for (const Constraint& c : model.constraints) {
        long long sum = 0;
        for (const LinTerm& t : c.terms) sum += t.coeff * value(t.var);
        bool ok = c.rel == Rel::Le ? sum <= c.rhs : c.rel == Rel::Ge ? sum >= c.rhs : sum == c.rhs;
        if (!ok) flag(c.name);
    }
    for (const std::string& var : model.binaries) {
        long long v = value(var);
        if (v != 0 && v != 1) flag("binary:" + var);
    }
    for (const std::string& var : model.generals)
        if (value(var) < 0) flag("bound:" + var);
    for (const auto& [var, fixed_value] : model.fixed)
        if (value(var) != fixed_value) flag("fixed:" + var);
    return result;
}

}  // namespace nswpd
