#include "gcfg/groupiso.hpp"

#include <algorithm>
#include <map>

#include "gcfg/errors.hpp"

namespace gcfg {

TableReport validate_table(const FiniteGroupTable& g) {
    const size_t n = g.order();
    TableReport rep;
    auto fail = [&](std::string w) {
        rep.ok = false;
        rep.witness = std::move(w);
        return rep;
    };
    if (n == 0) return fail("empty element list");
    if (g.mul.size() != n) return fail("table has wrong row count");
    for (size_t i = 0; i < n; ++i) {
        if (g.mul[i].size() != n) return fail("row " + g.elements[i] + " has wrong length");
        for (size_t j = 0; j < n; ++j)
            if (g.mul[i][j] < 0 || g.mul[i][j] >= static_cast<int>(n))
                return fail("entry (" + g.elements[i] + "," + g.elements[j] +
                            ") is out of range");
    }
    if (g.identity < 0 || g.identity >= static_cast<int>(n)) return fail("identity out of range");
    const size_t e = static_cast<size_t>(g.identity);
    for (size_t i = 0; i < n; ++i) {
        if (g.mul[e][i] != static_cast<int>(i) || g.mul[i][e] != static_cast<int>(i))
            return fail("identity fails at " + g.elements[i]);
    }
    if (g.inverse.size() != n) return fail("inverse table has wrong length");
    for (size_t i = 0; i < n; ++i) {
        int v = g.inverse[i];
        if (v < 0 || v >= static_cast<int>(n)) return fail("inverse out of range");
        if (g.mul[i][static_cast<size_t>(v)] != g.identity ||
            g.mul[static_cast<size_t>(v)][i] != g.identity)
            return fail("inverse fails at " + g.elements[i]);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (g.mul[static_cast<size_t>(g.mul[i][j])][k] !=
                    g.mul[i][static_cast<size_t>(g.mul[j][k])])
                    return fail("associativity fails at (" + g.elements[i] + "," +
                                g.elements[j] + "," + g.elements[k] + ")");
    return rep;
}

bool witness_valid(const FiniteGroupTable& g1, const FiniteGroupTable& g2,
                   const IsoWitness& w) {
    const size_t n = g1.order();
    if (g2.order() != n || w.map.size() != n) return false;
    std::vector<char> hit(n, 0);
    for (int v : w.map) {
        if (v < 0 || v >= static_cast<int>(n) || hit[v]) return false;
        hit[v] = 1;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (w.map[static_cast<size_t>(g1.mul[i][j])] !=
                g2.mul[static_cast<size_t>(w.map[i])][static_cast<size_t>(w.map[j])])
                return false;
    return true;
}

namespace {

// Greedy generating sequence: scan elements, keep those that enlarge the
// generated subgroup.
std::vector<int> generating_sequence(const FiniteGroupTable& g) {
    const size_t n = g.order();
    std::vector<char> in(n, 0);
    in[static_cast<size_t>(g.identity)] = 1;
    size_t count = 1;
    std::vector<int> gens;
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t i = 0; i < n; ++i) {
                if (!in[i]) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (!in[j]) continue;
                    int p = g.mul[i][j];
                    if (!in[static_cast<size_t>(p)]) {
                        in[static_cast<size_t>(p)] = 1;
                        ++count;
                        grew = true;
                    }
                }
            }
        }
    };
    for (size_t cand = 0; cand < n && count < n; ++cand) {
        if (in[cand]) continue;
        gens.push_back(static_cast<int>(cand));
        in[cand] = 1;
        ++count;
        close();
    }
    return gens;
}

struct IsoSearch {
    const FiniteGroupTable& g1;
    const FiniteGroupTable& g2;
    const std::vector<int>& gens;
    const std::vector<int>& ord1;
    const std::vector<int>& ord2;
    size_t n;

    // Extends the partial map with img[x] = y and closes under products of
    // mapped elements; false on conflict.
    bool close(std::vector<int>& img, std::vector<int>& mapped, int x, int y) const {
        std::vector<char> used(n, 0);
        for (size_t i = 0; i < n; ++i)
            if (img[i] >= 0) used[static_cast<size_t>(img[i])] = 1;
        if (img[static_cast<size_t>(x)] >= 0) return img[static_cast<size_t>(x)] == y;
        if (used[static_cast<size_t>(y)]) return false;
        img[static_cast<size_t>(x)] = y;
        used[static_cast<size_t>(y)] = 1;
        mapped.push_back(x);
        for (size_t a = 0; a < mapped.size(); ++a)
            for (size_t b = 0; b < mapped.size(); ++b) {
                int p = g1.times(mapped[a], mapped[b]);
                int q = g2.times(img[static_cast<size_t>(mapped[a])],
                                 img[static_cast<size_t>(mapped[b])]);
                int& slot = img[static_cast<size_t>(p)];
                if (slot < 0) {
                    if (used[static_cast<size_t>(q)]) return false;
                    slot = q;
                    used[static_cast<size_t>(q)] = 1;
                    mapped.push_back(p);
                } else if (slot != q) {
                    return false;
                }
            }
        return true;
    }

    bool assign(size_t gi, const std::vector<int>& img, const std::vector<int>& mapped,
                std::vector<int>& out) const {
        if (gi == gens.size()) {
            if (mapped.size() != n) return false;  // gens failed to generate (cannot happen)
            out = img;
            return true;
        }
        int g = gens[gi];
        for (size_t cand = 0; cand < n; ++cand) {
            if (ord2[cand] != ord1[static_cast<size_t>(g)]) continue;
            std::vector<int> img2 = img;
            std::vector<int> mapped2 = mapped;
            if (!close(img2, mapped2, g, static_cast<int>(cand))) continue;
            if (assign(gi + 1, img2, mapped2, out)) return true;
        }
        return false;
    }
};

} // namespace

std::optional<IsoWitness> iso_check(const FiniteGroupTable& g1, const FiniteGroupTable& g2) {
    if (g1.order() > 64 || g2.order() > 64)
        throw SizeLimit("isomorphism oracle is limited to order 64");
    TableReport r1 = validate_table(g1);
    if (!r1.ok) throw InvalidTable("first table invalid: " + r1.witness);
    TableReport r2 = validate_table(g2);
    if (!r2.ok) throw InvalidTable("second table invalid: " + r2.witness);
    if (g1.order() != g2.order()) return std::nullopt;
    const size_t n = g1.order();

    std::vector<int> ord1(n), ord2(n);
    for (size_t i = 0; i < n; ++i) ord1[i] = element_order(g1, static_cast<int>(i));
    for (size_t i = 0; i < n; ++i) ord2[i] = element_order(g2, static_cast<int>(i));
    auto profile = [](std::vector<int> o) {
        std::sort(o.begin(), o.end());
        return o;
    };
    if (profile(ord1) != profile(ord2)) return std::nullopt;

    std::vector<int> gens = generating_sequence(g1);
    std::vector<int> img(n, -1);
    std::vector<int> mapped;
    img[static_cast<size_t>(g1.identity)] = g2.identity;
    mapped.push_back(g1.identity);

    IsoSearch search{g1, g2, gens, ord1, ord2, n};
    std::vector<int> out;
    if (!search.assign(0, img, mapped, out)) return std::nullopt;
    IsoWitness w{std::move(out)};
    if (!witness_valid(g1, g2, w)) throw Error("internal: produced a bad isomorphism witness");
    return w;
}

} // namespace gcfg
