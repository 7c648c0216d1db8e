#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcfg/matroid.hpp"

namespace gcfg {

/// The seven node roles of a configuration; x4 is the abelian extension node.
enum class Role { a1, a2, a3, x1, x2, x3, x4 };

constexpr std::array<Role, 7> kAllRoles = {Role::a1, Role::a2, Role::a3,
                                           Role::x1, Role::x2, Role::x3, Role::x4};

const char* role_name(Role r);

/// A configuration candidate: six (optionally seven) matroid points with
/// declared dimensions m (group line) and k (point line).
struct ConfigPoints {
    LinearMatroid matroid;
    std::array<std::string, 7> labels;  // indexed by Role; labels[x4] may be empty
    std::vector<std::string> base;
    int m = 0;
    int k = 0;

    bool has_x4() const { return !labels[static_cast<int>(Role::x4)].empty(); }
    const std::string& label(Role r) const { return labels[static_cast<int>(r)]; }

    /// Throws IncompleteConfig / UnknownPoint / InvalidParams when the
    /// role bindings or the m >= k >= 0 requirement are broken.
    void check_well_formed() const;
};

struct ClauseCheck {
    std::string id;       // e.g. "ii.x1x2x3", "colinear.x2x3|a1"
    bool pass = false;
    int expected = 0;     // expected rank value; -1 for boolean checks
    int measured = 0;
    std::string detail;
};

struct ClauseReport {
    std::vector<ClauseCheck> clauses;
    bool pass = true;

    const ClauseCheck* first_failure() const;
    void add(ClauseCheck c);
};

/// Checks the dimension clauses (i)-(iv) and the co-linear
/// inter-definability conditions against the declared (m, k).
ClauseReport validate_mk(const ConfigPoints& cfg);

/// Checks the x4 node: dim(x4/A) = k, inter-definability of x1,x4 over a1·A
/// and of x2,x4 over a2·A, and that the re-rolled six points (x1<-x2,
/// x2<-x1, x3<-x4) again satisfy validate_mk.  That role assignment is the
/// unique one consistent with the two added lines (a1; x4, x1) and
/// (a2; x2, x4).
ClauseReport validate_abelian_node(const ConfigPoints& cfg);

} // namespace gcfg
