#ifndef NSWPD_ILP_HPP
#define NSWPD_ILP_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nswpd/graph.hpp"

namespace nswpd {

// Mixed-integer model for the minimum node scanwidth of a tree-extension.
// Variables: s (objective), x_u_v (extension edge), y_u_v (reachability in
// the extension, y_v_v fixed to 1), z_u_v (u in the bag of v), a_u_v_w
// (path u..v plus edge vw). No solver is linked; the model is emitted as LP
// text and assignments are checked directly.

enum class Rel { Le, Ge, Eq };

struct LinTerm {
    long long coeff;
    std::string var;
};

struct Constraint {
    std::string name;
    std::vector<LinTerm> terms;
    Rel rel;
    long long rhs;
};

struct IlpModel {
    std::string objective = "s";
    std::vector<Constraint> constraints;
    std::vector<std::string> binaries;
    std::vector<std::string> generals;
    // Variables pinned by the Bounds section (reflexive y = 1, loop x = 0).
    std::vector<std::pair<std::string, long long>> fixed;
};

IlpModel build_ilp(const Dag& g);

// Deterministic LP-format text of build_ilp(g).
std::string emit_ilp(const Dag& g);

using Assignment = std::map<std::string, long long>;

// Variable assignment induced by a tree-extension: x from the parent map, y
// its reflexive-transitive closure, z from the bags, a from its definition,
// s the width.
Assignment encode_extension(const Dag& g, const std::vector<int>& parent);

class missing_variable : public std::runtime_error {
public:
    explicit missing_variable(const std::string& var)
        : std::runtime_error("assignment is missing variable " + var) {}
};

struct CheckResult {
    bool feasible;
    std::vector<std::string> violated;  // constraint names, plus bound/domain tags
    long long objective;
};

CheckResult check_assignment(const IlpModel& model, const Assignment& assignment);

}  // namespace nswpd

#endif
