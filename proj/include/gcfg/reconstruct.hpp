#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcfg/finstance.hpp"
#include "gcfg/group.hpp"

namespace gcfg {

struct ClosureClause {
    std::string name;  // "kl_in_h", "hk_gives_l", "lh_gives_k"
    bool pass = true;
    long long checked = 0;
    std::string witness;
};

struct ClosureReport {
    std::vector<ClosureClause> clauses;
    bool pass = true;
};

/// Composition closure of the families: (i) every k∘l is some h,
/// (ii) every (h,k) admits l with k∘l = h, (iii) every (l,h) admits k.
ClosureReport closure_check(const Families& fams);

struct PresentationReport {
    bool holds = true;
    long long triples = 0;
    std::string witness;  // first (l1,l2,l3) with no matching l4
};

/// For all l1,l2,l3 there is l4 with l1^-1 l2 = l3^-1 l4.
PresentationReport presentation_property(const FunctionFamily& L);

struct Reconstruction {
    FiniteGroupTable group;
    GroupAction action;           // on the x2 sort
    std::vector<GermClass> classes;  // one per group element, same order
    std::string anchor;
};

/// Builds the group {l_a^-1 l_a' : a' in Sa1} modulo extensional equality,
/// with its action on the x2 sort.  Element order is first-seen over the
/// parameter sort, so tables are deterministic.  Throws ClosureEscape if a
/// product or inverse leaves the enumerated classes (the input then
/// violated the preconditions), AnchorOutOfSort for a bad anchor.
Reconstruction build_group(const FunctionalInstance& inst, const std::string& anchor_a);
Reconstruction build_group(const FunctionalInstance& inst);  // designated a1 / first element

bool check_transitivity(const GroupAction& action);

struct AbClaimReport {
    bool holds = true;
    long long triples = 0;
    std::string witness;  // first (h1,h2,h3) with h1 h2^-1 h3 != h3 h2^-1 h1
};

/// h1 h2^-1 h3 = h3 h2^-1 h1 over all parameter triples of the H family.
AbClaimReport ab_claim(const FunctionFamily& H);

bool check_abelian(const FiniteGroupTable& g);

struct FaithfulnessReport {
    bool faithful = false;
    size_t param_count = 0;
    size_t class_count = 0;
    std::optional<size_t> kernel_size;  // class size, when uniform
    std::vector<size_t> class_sizes;    // sorted multiset
};

/// Germ-collapse of the L parameters: faithful iff no two parameters give
/// the same function.
FaithfulnessReport faithfulness_report(const FunctionalInstance& inst);

struct EmittedConfig {
    FunctionalInstance instance;
    std::string g1, g2, g3;  // group element names
    std::string y1, y2, y3;  // x2-sort element ids
    bool g3_y2_is_y1 = false;
    bool g1_y2_is_y3 = false;
};

/// Re-emits the internal configuration of the reconstructed group: the
/// canonical instance of the group acting on the x2 sort, with designated
/// points g1 = l_a^-1 l_{a1}, g2 = h_b^-1 k_{a2} l_a, g3 = g2 g1,
/// y2 = x2, y3 = l_a^-1(x3), y1 = h_b^-1(x1).
EmittedConfig emit_g_configuration(const FunctionalInstance& inst, const std::string& anchor_a,
                                   const std::string& anchor_b);

/// The canonical instance of a transitive group action (sorts G and X,
/// composition and action tables), designated at the identity and the
/// first point.  Throws NotTransitive; with_abelian_tables additionally
/// requires commutativity (NotAbelian) and fills R, S and the x4 sort.
FunctionalInstance instance_of_action(const FiniteGroupTable& g, const GroupAction& a,
                                      bool with_abelian_tables = false);

} // namespace gcfg
