#pragma once

#include <string>
#include <vector>

namespace gcfg {

/// Explicit finite group: element names, multiplication table (indices),
/// identity index and inverse table.
struct FiniteGroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mul;  // mul[i][j] = index of elements[i] * elements[j]
    int identity = 0;
    std::vector<int> inverse;

    size_t order() const { return elements.size(); }
    int times(int i, int j) const { return mul[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

/// A group acting on a finite set; transitivity and point-separation are
/// computed from the data, never declared.
struct GroupAction {
    std::vector<std::string> set_elems;
    std::vector<std::vector<int>> act;  // act[g][x] = index of g . x
    bool transitive = false;
    bool separates_points = false;  // distinct elements act by distinct maps
};

/// Identity row trivial and act(g*h, x) = act(g, act(h, x)) everywhere.
bool action_axioms_ok(const FiniteGroupTable& g, const GroupAction& a);

bool is_abelian(const FiniteGroupTable& g);

/// Multiplicative order of element i.
int element_order(const FiniteGroupTable& g, int i);

} // namespace gcfg
