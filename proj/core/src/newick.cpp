#include "nswpd/newick.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "nswpd/weight.hpp"

namespace nswpd {

namespace {

bool is_name_char(char c) {
    switch (c) {
        case '(': case ')': case ',': case ':': case ';': case '#':
            return false;
        default:
            return !std::isspace(static_cast<unsigned char>(c));
    }
}

/*
  Recursive descent parser for the grammar

     Network    -> Subtree ";"
     Subtree    -> "(" Branch ("," Branch)* ")" NodeName | NodeName
     Branch     -> Subtree [":" Length]
     NodeName   -> [label] ["#H" tag]

  Hybrid occurrences sharing a tag refer to the same vertex; every occurrence
  contributes the edge from its textual parent.
*/
struct Parser {
    const std::string& text;
    size_t pos = 0;

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::map<std::string, int> hybrid_vertex;
    std::map<std::string, int> hybrid_occurrences;

    explicit Parser(const std::string& text) : text(text) {}

    [[noreturn]] void fail(const std::string& why) {
        throw parse_error(parse_error::Syntax, pos,
                          "parse error at position " + std::to_string(pos) + ": " + why);
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_name() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }

    Rational read_length() {
        skip_space();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == 'e' || text[pos] == 'E' ||
                ((text[pos] == '-' || text[pos] == '+') &&
                 (text[pos - 1] == 'e' || text[pos - 1] == 'E'))))
            ++pos;
        if (pos == start) fail("expected branch length");
        try {
            return rational_from_decimal(text.substr(start, pos - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    int new_vertex(const std::string& label) {
        labels.push_back(label);
        return static_cast<int>(labels.size()) - 1;
    }

    // Returns the vertex id of the subtree root.
    int parse_subtree() {
        std::vector<std::pair<int, Rational>> kids;
        if (eat('(')) {
            do {
                int child = parse_subtree();
                Rational len(0);
                if (eat(':')) len = read_length();
                kids.push_back({child, len});
            } while (eat(','));
            if (!eat(')')) fail("expected ')'");
        }
        std::string label = read_name();
        int v;
        if (eat('#')) {
            std::string tag = read_name();
            if (tag.empty() || (tag[0] != 'H' && tag[0] != 'h' && tag[0] != 'L' && tag[0] != 'l'))
                fail("expected hybrid tag after '#'");
            auto it = hybrid_vertex.find(tag);
            if (it == hybrid_vertex.end()) {
                v = new_vertex(label);
                hybrid_vertex[tag] = v;
            } else {
                v = it->second;
                if (!label.empty()) {
                    if (labels[v].empty())
                        labels[v] = label;
                    else if (labels[v] != label)
                        throw parse_error(parse_error::InconsistentHybridTag, pos,
                                          "hybrid tag #" + tag + " has conflicting labels '" +
                                              labels[v] + "' and '" + label + "'");
                }
            }
            ++hybrid_occurrences[tag];
        } else {
            if (kids.empty() && label.empty()) fail("expected a node");
            v = new_vertex(label);
        }
        for (auto& [child, len] : kids) edges.push_back({v, child, len});
        return v;
    }

    Dag run() {
        int root = parse_subtree();
        if (eat(':')) read_length();  // tolerated, ignored at the root
        if (!eat(';')) fail("expected ';'");
        skip_space();
        if (pos != text.size()) fail("trailing characters after ';'");
        (void)root;
        for (auto& [tag, count] : hybrid_occurrences)
            if (count < 2)
                throw parse_error(parse_error::DanglingHybrid, pos,
                                  "hybrid tag #" + tag + " occurs only once");
        const int n = static_cast<int>(labels.size());
        try {
            return Dag(n, std::move(edges), std::move(labels));
        } catch (const validation_error& e) {
            throw parse_error(parse_error::CyclicHybrid, pos,
                              std::string("hybrid tags induce a cycle: ") + e.what());
        }
    }
};

}  // namespace

Dag parse_enewick(const std::string& text) {
    Parser parser(text);
    return parser.run();
}

namespace {

struct Writer {
    const Dag& g;
    std::map<int, int> hybrid_tag;  // reticulation vertex -> tag number
    std::vector<char> expanded;
    int next_tag = 1;
    std::ostringstream out;

    explicit Writer(const Dag& g) : g(g), expanded(g.vertex_count(), 0) {}

    void write_vertex(int v, const Rational* incoming) {
        bool reticulation = g.in_degree(v) >= 2;
        bool expand = true;
        int tag = 0;
        if (reticulation) {
            auto it = hybrid_tag.find(v);
            if (it == hybrid_tag.end()) {
                tag = next_tag++;
                hybrid_tag[v] = tag;
            } else {
                tag = it->second;
                expand = false;
            }
        }
        if (expand && g.out_degree(v) > 0) {
            out << '(';
            bool first = true;
            for (int e : g.out_edge_ids(v)) {
                if (!first) out << ',';
                first = false;
                write_vertex(g.edge(e).head, &g.edge(e).weight);
            }
            out << ')';
        }
        out << g.label(v);
        if (reticulation) out << "#H" << tag;
        if (incoming) out << ':' << decimal_string(*incoming);
    }
};

}  // namespace

std::string serialize_enewick(const Network& net) {
    Writer writer(net.dag());
    writer.write_vertex(net.root(), nullptr);
    writer.out << ';';
    return writer.out.str();
}

CostTable parse_costs(const std::string& text, const Network& net) {
    CostTable table;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw cost_error(cost_error::Syntax,
                             "line " + std::to_string(lineno) + ": expected taxon,cost");
        std::string taxon = line.substr(0, comma);
        std::string value = line.substr(comma + 1);
        if (lineno == 1 && taxon == "taxon" && value == "cost") continue;
        size_t idx = 0;
        long long cost = 0;
        bool ok = !value.empty();
        try {
            cost = std::stoll(value, &idx);
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok || idx != value.size())
            throw cost_error(cost_error::NonIntegerCost,
                             "cost of " + taxon + " is not an integer: " + value);
        if (cost < 0)
            throw cost_error(cost_error::NegativeCost, "cost of " + taxon + " is negative");
        try {
            net.leaf_by_taxon(taxon);
        } catch (const std::out_of_range&) {
            throw cost_error(cost_error::UnknownTaxon, "unknown taxon: " + taxon);
        }
        if (!table.emplace(taxon, cost).second)
            throw cost_error(cost_error::Syntax, "duplicate cost entry for " + taxon);
    }
    for (int leaf : net.leaves())
        if (!table.count(net.taxon(leaf)))
            throw cost_error(cost_error::MissingTaxon, "missing cost for " + net.taxon(leaf));
    return table;
}

std::string serialize_costs(const CostTable& costs) {
    std::ostringstream out;
    out << "taxon,cost\n";
    for (const auto& [taxon, cost] : costs) out << taxon << ',' << cost << '\n';
    return out.str();
}

CostTable unit_costs(const Network& net) {
    CostTable table;
    for (int leaf : net.leaves()) table[net.taxon(leaf)] = 1;
    return table;
}

long long total_cost(const CostTable& costs) {
    long long total = 0;
    for (const auto& [taxon, cost] : costs) total += cost;
    return total;
}

}  // namespace nswpd
