#ifndef NSWPD_NEWICK_HPP
#define NSWPD_NEWICK_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "nswpd/graph.hpp"

namespace nswpd {

class parse_error : public std::runtime_error {
public:
    enum Kind { Syntax, InconsistentHybridTag, DanglingHybrid, CyclicHybrid };
    parse_error(Kind kind, size_t position, const std::string& message)
        : std::runtime_error(message), kind(kind), position(position) {}
    Kind kind;
    size_t position;
};

// Extended Newick: hybrid occurrences `name#H<k>` merge into one reticulation
// vertex; each occurrence contributes the incoming edge from its textual
// parent with that occurrence's branch length. Missing lengths default to 0.
// Vertex ids are assigned densely in order of first appearance.
Dag parse_enewick(const std::string& text);

// Deterministic inverse: children in stored order, hybrid tags numbered in
// DFS-first-visit order, the first-visited occurrence carries the children.
std::string serialize_enewick(const Network& net);

// taxon -> non-negative integer cost
using CostTable = std::map<std::string, long long>;

class cost_error : public std::runtime_error {
public:
    enum Kind { UnknownTaxon, MissingTaxon, NonIntegerCost, NegativeCost, Syntax };
    cost_error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind(kind) {}
    Kind kind;
};

// CSV lines `taxon,cost`; optional `taxon,cost` header; LF or CRLF.
CostTable parse_costs(const std::string& text, const Network& net);
std::string serialize_costs(const CostTable& costs);
CostTable unit_costs(const Network& net);

long long total_cost(const CostTable& costs);

}  // namespace nswpd

#endif
