#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcfg/group.hpp"

namespace gcfg {

struct TableReport {
    bool ok = true;
    std::string witness;
};

/// Full closure / identity / inverse / associativity sweep.
TableReport validate_table(const FiniteGroupTable& g);

/// An isomorphism, as an element-index map from the first group onto the
/// second, multiplication-preserving on every pair.
struct IsoWitness {
    std::vector<int> map;
};

bool witness_valid(const FiniteGroupTable& g1, const FiniteGroupTable& g2, const IsoWitness& w);

/// Deterministic generator-based backtracking with element-order-profile
/// pruning.  Throws InvalidTable on broken input and SizeLimit above order
/// 64 (the oracle stays brute-force auditable).
std::optional<IsoWitness> iso_check(const FiniteGroupTable& g1, const FiniteGroupTable& g2);

} // namespace gcfg
