#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcfg/bijection.hpp"
#include "gcfg/finstance.hpp"

namespace gcfg {

/// A 4-ary relation over four sorts, coordinates ordered (a1, a2, x1, x2):
/// the tuple holds when the group-line pair (a1, a2) carries x2 to x1.
/// Fixing (1,2) / (1,4) / (1,3) must give bijection graphs between the
/// remaining coordinates; the closure axioms are checked, never assumed.
struct QuadRelation {
    std::vector<Sort> sorts;
    std::array<int, 4> coord_sort{};        // sort index per coordinate
    std::vector<std::array<int, 4>> tuples;  // element indices, sorted
    bool abelian_claimed = false;

    const Sort& coord(int c) const { return sorts[static_cast<size_t>(coord_sort[c])]; }
    std::string tuple_str(const std::array<int, 4>& t) const;
};

struct FiberCheck {
    std::string pattern;  // "12->34", "14->23", "13->24"
    bool pass = true;
    std::string witness;
};

struct QuadAxiom {
    std::string name;  // "i", "ii", "iii"
    bool pass = true;
    long long checked = 0;
    std::string witness;  // the three premises and the missing conclusion
};

struct AxiomReport {
    std::array<FiberCheck, 3> fibers;
    std::array<QuadAxiom, 3> axioms;
    bool fibers_pass = true;
    /// Fibers plus axioms (i) and (ii); (iii) joins only when the
    /// quadrangle claims to be abelian.
    bool pass = true;
};

AxiomReport validate_quadrangle(const QuadRelation& q);

/// One family per two-coordinate pattern, parameters as id pairs; each
/// family comes with its germ-class partition (canonical parameter = least
/// pair).  The s family is produced only when axiom (iii) holds.
struct QuadFamilies {
    struct Entry {
        std::vector<std::pair<std::string, std::string>> params;
        std::vector<Bijection> fns;
        std::vector<std::vector<size_t>> classes;  // member indices per class
        std::vector<size_t> class_of;              // member -> class
    };
    Entry h;  // fix (a1,a2): x1 -> x2
    Entry l;  // fix (a1,x2): a2 -> x1
    std::optional<Entry> s;  // fix (a1,x1): a2 -> x2
};

QuadFamilies extract_quad_functions(const QuadRelation& q);

/// The configuration carried by a quadrangle: a1, a2 and the h-classes on
/// the group line; x2-slot = 4th coordinate, x3-slot = l-classes, x1-slot =
/// 3rd coordinate.  When axiom (iii) holds the s-classes become the x4
/// node with its R and S tables.
FunctionalInstance quad_to_config(const QuadRelation& q);

/// The quadrangle (a1, a2, x1, x2) of a validated instance:
/// (u, v, t, s) holds iff H(F(v, u), s) = t.
QuadRelation config_to_quad(const FunctionalInstance& inst);

} // namespace gcfg
