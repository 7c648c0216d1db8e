#pragma once

#include <string>
#include <vector>

#include "gcfg/errors.hpp"

namespace gcfg {

/// A total bijection between two finite sorts, stored as a dense index map.
/// Sorts are referenced by name so composition can be signature-checked.
struct Bijection {
    std::string dom;
    std::string cod;
    std::vector<int> map;  // map[i] = image index; a permutation of 0..n-1 when dom == cod

    int apply(int i) const { return map[static_cast<size_t>(i)]; }
    size_t size() const { return map.size(); }

    bool operator==(const Bijection& o) const { return map == o.map; }
};

/// Verifies totality/injectivity/surjectivity of the index map.
bool is_bijective_map(const std::vector<int>& map, size_t codomain_size);

/// f after g; throws SortMismatch unless g.cod == f.dom.
Bijection compose(const Bijection& f, const Bijection& g);

Bijection inverse(const Bijection& f);

Bijection identity_bijection(const std::string& sort, size_t n);

/// A parameter-indexed family of bijections (the families L, K, H, R, S).
/// Parameters are kept in their sort's element order; duplicates (equal
/// functions under distinct parameters) are retained.
struct FunctionFamily {
    std::string name;  // "L", "K", ...
    std::string dom;
    std::string cod;
    std::vector<std::string> params;
    std::vector<Bijection> fns;

    size_t size() const { return params.size(); }
};

/// Extensional equality class inside a family: one mapping, all parameters
/// that realise it.  The least parameter is the display name of the class.
struct GermClass {
    Bijection fn;
    std::vector<std::string> params;

    const std::string& canonical() const { return params.front(); }
};

/// Partition of a family by extensional equality, classes in first-seen
/// (i.e. least-parameter) order.
std::vector<GermClass> germ_classes(const FunctionFamily& fam);

} // namespace gcfg
