#include "gcfg/bijection.hpp"

#include <map>

namespace gcfg {

bool is_bijective_map(const std::vector<int>& map, size_t codomain_size) {
    if (map.size() != codomain_size) return false;
    std::vector<char> hit(codomain_size, 0);
    for (int v : map) {
        if (v < 0 || v >= static_cast<int>(codomain_size) || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

Bijection compose(const Bijection& f, const Bijection& g) {
    if (g.cod != f.dom)
        throw SortMismatch("cannot compose " + f.dom + "->" + f.cod + " after " + g.dom +
                           "->" + g.cod);
    if (g.map.size() != f.map.size())
        throw SortMismatch("composition size mismatch between sorts " + g.dom + " and " + f.dom);
    Bijection out;
    out.dom = g.dom;
    out.cod = f.cod;
    out.map.resize(g.map.size());
    for (size_t i = 0; i < g.map.size(); ++i) out.map[i] = f.map[static_cast<size_t>(g.map[i])];
    return out;
}

Bijection inverse(const Bijection& f) {
    Bijection out;
    out.dom = f.cod;
    out.cod = f.dom;
    out.map.assign(f.map.size(), -1);
    for (size_t i = 0; i < f.map.size(); ++i) out.map[static_cast<size_t>(f.map[i])] = static_cast<int>(i);
    return out;
}

Bijection identity_bijection(const std::string& sort, size_t n) {
    Bijection out;
    out.dom = sort;
    out.cod = sort;
    out.map.resize(n);
    for (size_t i = 0; i < n; ++i) out.map[i] = static_cast<int>(i);
    return out;
}

std::vector<GermClass> germ_classes(const FunctionFamily& fam) {
    std::vector<GermClass> classes;
    std::map<std::vector<int>, size_t> seen;
    for (size_t i = 0; i < fam.size(); ++i) {
        auto it = seen.find(fam.fns[i].map);
        if (it == seen.end()) {
            seen.emplace(fam.fns[i].map, classes.size());
            classes.push_back(GermClass{fam.fns[i], {fam.params[i]}});
        } else {
            classes[it->second].params.push_back(fam.params[i]);
        }
    }
    return classes;
}

} // namespace gcfg
