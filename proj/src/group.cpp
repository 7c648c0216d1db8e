#include "gcfg/group.hpp"

namespace gcfg {

bool action_axioms_ok(const FiniteGroupTable& g, const GroupAction& a) {
    const size_t n = g.order(), m = a.set_elems.size();
    if (a.act.size() != n) return false;
    for (size_t i = 0; i < n; ++i)
        if (a.act[i].size() != m) return false;
    for (size_t x = 0; x < m; ++x)
        if (a.act[static_cast<size_t>(g.identity)][x] != static_cast<int>(x)) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int ij = g.mul[i][j];
            for (size_t x = 0; x < m; ++x)
                if (a.act[static_cast<size_t>(ij)][x] !=
                    a.act[i][static_cast<size_t>(a.act[j][x])])
                    return false;
        }
    return true;
}

bool is_abelian(const FiniteGroupTable& g) {
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = i + 1; j < g.order(); ++j)
            if (g.mul[i][j] != g.mul[j][i]) return false;
    return true;
}

int element_order(const FiniteGroupTable& g, int i) {
    int ord = 1;
    int cur = i;
    while (cur != g.identity) {
        cur = g.times(cur, i);
        ++ord;
    }
    return ord;
}

} // namespace gcfg
