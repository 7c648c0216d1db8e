#pragma once

#include <string>
#include <vector>

#include "gcfg/configuration.hpp"
#include "gcfg/finstance.hpp"
#include "gcfg/group.hpp"

namespace gcfg {

/// Recognised group specs: "cyclic:n", "dihedral:n", "symmetric:n" (n<=4),
/// "quaternion8", and direct products joined with 'x' or '*'
/// ("cyclic:2xcyclic:4").  Throws UnknownSpec.
FiniteGroupTable builtin_group(const std::string& spec);

/// Action specs: "regular" (left translation), "natural" (points for
/// symmetric, vertices for dihedral, translation for cyclic), and
/// "quotient:g1,g2,..." (translation on the cosets of the normal subgroup
/// generated by the named elements).
GroupAction builtin_action(const FiniteGroupTable& g, const std::string& spec);

/// The canonical instance of a transitive action; tables F, L, H, K.
FunctionalInstance gen_configuration(const FiniteGroupTable& g, const GroupAction& a);

/// As above plus the x4 sort and the R, S tables; requires a commutative
/// group (NotAbelian otherwise).
FunctionalInstance gen_abelian_extension(const FiniteGroupTable& g, const GroupAction& a);

/// Translation instance of F_p^m on itself at matroid level: ambient 3m,
/// generic blocks g1, g2, x and the seven points a1=g1, a2=g2, a3=g1+g2,
/// x2=x, x3=g1+x, x1=g1+g2+x, x4=g2+x; every clause holds with m=k.
ConfigPoints gen_matroid_instance(int p, int m);

} // namespace gcfg
