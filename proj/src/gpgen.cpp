#include "gcfg/gpgen.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcfg/reconstruct.hpp"

namespace gcfg {

namespace {

FiniteGroupTable finish(FiniteGroupTable g) {
    const size_t n = g.order();
    g.inverse.assign(n, -1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (g.mul[i][j] == g.identity) g.inverse[i] = static_cast<int>(j);
    return g;
}

FiniteGroupTable cyclic_group(int n) {
    if (n < 1) throw UnknownSpec("cyclic order must be positive");
    FiniteGroupTable g;
    for (int i = 0; i < n; ++i) g.elements.push_back(std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    g.identity = 0;
    return finish(std::move(g));
}

// D_n of order 2n: elements r^a s^b with s r = r^-1 s.
FiniteGroupTable dihedral_group(int n) {
    if (n < 1) throw UnknownSpec("dihedral parameter must be positive");
    FiniteGroupTable g;
    auto idx = [n](int a, int b) { return b * n + a; };
    g.elements.resize(static_cast<size_t>(2 * n));
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a)
            g.elements[static_cast<size_t>(idx(a, b))] =
                (b ? "sr" : "r") + std::to_string(a);
    g.mul.assign(2 * n, std::vector<int>(2 * n));
    for (int b1 = 0; b1 < 2; ++b1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + a2*(-1)^b1) s^(b1+b2)
                    int a = ((a1 + (b1 ? -a2 : a2)) % n + n) % n;
                    int b = (b1 + b2) % 2;
                    g.mul[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
                }
    g.identity = idx(0, 0);
    return finish(std::move(g));
}

FiniteGroupTable symmetric_group(int n) {
    if (n < 1 || n > 4) throw UnknownSpec("symmetric groups are provided for n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::map<std::vector<int>, int> idx;
    FiniteGroupTable g;
    for (size_t i = 0; i < perms.size(); ++i) {
        idx.emplace(perms[i], static_cast<int>(i));
        std::string name;
        for (int v : perms[i]) name += std::to_string(v);
        g.elements.push_back(name);
    }
    const size_t m = perms.size();
    g.mul.assign(m, std::vector<int>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            std::vector<int> comp(n);  // (p*q)(v) = p(q(v))
            for (int v = 0; v < n; ++v) comp[v] = perms[i][static_cast<size_t>(perms[j][v])];
            g.mul[i][j] = idx.at(comp);
        }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    g.identity = idx.at(id);
    return finish(std::move(g));
}

FiniteGroupTable quaternion_group() {
    // 1,-1,i,-i,j,-j,k,-k with ij=k, jk=i, ki=j.
    const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    auto axis = [](int e) { return e / 2; };  // 0=1, 1=i, 2=j, 3=k
    auto enc = [](int ax, int sg) { return ax * 2 + (sg < 0 ? 1 : 0); };
    // axis multiplication table with result sign
    static const int ax_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int ax_sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    FiniteGroupTable g;
    g.elements = names;
    g.mul.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ax = ax_mul[axis(a)][axis(b)];
            int sg = sign(a) * sign(b) * ax_sgn[axis(a)][axis(b)];
            g.mul[a][b] = enc(ax, sg);
        }
    g.identity = 0;
    return finish(std::move(g));
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    FiniteGroupTable g;
    const size_t na = a.order(), nb = b.order();
    auto idx = [nb](size_t i, size_t j) { return i * nb + j; };
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            g.elements.push_back(a.elements[i] + "|" + b.elements[j]);
    g.mul.assign(na * nb, std::vector<int>(na * nb));
    for (size_t i1 = 0; i1 < na; ++i1)
        for (size_t j1 = 0; j1 < nb; ++j1)
            for (size_t i2 = 0; i2 < na; ++i2)
                for (size_t j2 = 0; j2 < nb; ++j2)
                    g.mul[idx(i1, j1)][idx(i2, j2)] = static_cast<int>(
                        idx(static_cast<size_t>(a.mul[i1][i2]),
                            static_cast<size_t>(b.mul[j1][j2])));
    g.identity = static_cast<int>(
        idx(static_cast<size_t>(a.identity), static_cast<size_t>(b.identity)));
    return finish(std::move(g));
}

FiniteGroupTable atomic_group(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    int arg = -1;
    if (colon != std::string::npos) {
        const std::string tail = spec.substr(colon + 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw UnknownSpec("bad group parameter in '" + spec + "'");
        arg = std::stoi(tail);
    }
    if (head == "cyclic" && arg > 0) return cyclic_group(arg);
    if (head == "dihedral" && arg > 0) return dihedral_group(arg);
    if (head == "symmetric" && arg > 0) return symmetric_group(arg);
    if (head == "quaternion8" && colon == std::string::npos) return quaternion_group();
    throw UnknownSpec("unrecognised group spec '" + spec + "'");
}

} // namespace

FiniteGroupTable builtin_group(const std::string& spec) {
    // split on 'x' or '*' into direct factors; factor names contain neither
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == 'x' || c == '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.empty() || parts[0].empty()) throw UnknownSpec("empty group spec");
    FiniteGroupTable g = atomic_group(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, atomic_group(parts[i]));
    return g;
}

namespace {

GroupAction regular_action(const FiniteGroupTable& g) {
    GroupAction a;
    a.set_elems = g.elements;
    a.act = g.mul;
    a.transitive = true;
    a.separates_points = true;
    return a;
}

GroupAction finish_action(const FiniteGroupTable& g, GroupAction a) {
    const size_t m = a.set_elems.size();
    std::vector<char> orbit(m, 0);
    for (size_t i = 0; i < g.order(); ++i) orbit[static_cast<size_t>(a.act[i][0])] = 1;
    a.transitive = std::find(orbit.begin(), orbit.end(), 0) == orbit.end();
    a.separates_points = true;
    for (size_t i = 0; i < g.order() && a.separates_points; ++i)
        for (size_t j = i + 1; j < g.order(); ++j)
            if (a.act[i] == a.act[j]) {
                a.separates_points = false;
                break;
            }
    return a;
}

GroupAction natural_action(const FiniteGroupTable& g, const std::string& base_name) {
    // Recover the point action from element names: symmetric elements are
    // one-line permutation strings; dihedral elements are r^a / s r^a on
    // the n vertices; cyclic natural = regular.
    if (base_name == "cyclic") return regular_action(g);
    GroupAction a;
    if (base_name == "symmetric") {
        const size_t n = g.elements[0].size();
        for (size_t v = 0; v < n; ++v) a.set_elems.push_back(std::to_string(v));
        a.act.assign(g.order(), std::vector<int>(n));
        for (size_t i = 0; i < g.order(); ++i)
            for (size_t v = 0; v < n; ++v)
                a.act[i][v] = g.elements[i][v] - '0';
        return finish_action(g, std::move(a));
    }
    if (base_name == "dihedral") {
        const int n = static_cast<int>(g.order()) / 2;
        for (int v = 0; v < n; ++v) a.set_elems.push_back(std::to_string(v));
        a.act.assign(g.order(), std::vector<int>(n));
        for (size_t i = 0; i < g.order(); ++i) {
            const std::string& name = g.elements[i];
            bool flip = name[0] == 's';
            int rot = std::stoi(name.substr(flip ? 2 : 1));
            for (int v = 0; v < n; ++v)
                a.act[i][static_cast<size_t>(v)] = ((flip ? -v : v) + rot % n + n) % n;
        }
        return finish_action(g, std::move(a));
    }
    throw UnknownSpec("no natural action for '" + base_name + "'");
}

GroupAction quotient_action(const FiniteGroupTable& g, const std::string& gens_csv) {
    // Subgroup generated by the named elements, closed and checked normal.
    const size_t n = g.order();
    std::vector<int> gens;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        auto it = std::find(g.elements.begin(), g.elements.end(), cur);
        if (it == g.elements.end())
            throw UnknownSpec("quotient generator '" + cur + "' is not a group element");
        gens.push_back(static_cast<int>(it - g.elements.begin()));
        cur.clear();
    };
    for (char c : gens_csv) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();

    std::vector<char> in(n, 0);
    in[static_cast<size_t>(g.identity)] = 1;
    for (int x : gens) in[static_cast<size_t>(x)] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < n; ++i)
            if (in[i])
                for (size_t j = 0; j < n; ++j)
                    if (in[j] && !in[static_cast<size_t>(g.mul[i][j])]) {
                        in[static_cast<size_t>(g.mul[i][j])] = 1;
                        grew = true;
                    }
    }
    for (size_t x = 0; x < n; ++x) {
        if (!in[x]) continue;
        for (size_t h = 0; h < n; ++h) {
            int conj = g.mul[static_cast<size_t>(g.mul[h][x])]
                            [static_cast<size_t>(g.inverse[h])];
            if (!in[static_cast<size_t>(conj)])
                throw UnknownSpec("the generated subgroup is not normal");
        }
    }

    // Cosets named by their least member.
    std::vector<int> coset_of(n, -1);
    std::vector<std::string> coset_names;
    for (size_t x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(coset_names.size());
        coset_names.push_back(g.elements[x]);
        for (size_t h = 0; h < n; ++h)
            if (in[h]) coset_of[static_cast<size_t>(g.mul[x][h])] = c;
    }
    GroupAction a;
    a.set_elems = coset_names;
    a.act.assign(n, std::vector<int>(coset_names.size()));
    std::vector<int> rep(coset_names.size(), -1);
    for (size_t x = 0; x < n; ++x)
        if (rep[static_cast<size_t>(coset_of[x])] < 0)
            rep[static_cast<size_t>(coset_of[x])] = static_cast<int>(x);
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < coset_names.size(); ++c)
            a.act[i][c] = coset_of[static_cast<size_t>(
                g.mul[i][static_cast<size_t>(rep[c])])];
    return finish_action(g, std::move(a));
}

} // namespace

GroupAction builtin_action(const FiniteGroupTable& g, const std::string& spec) {
    if (spec == "regular") return regular_action(g);
    if (spec == "natural") {
        // infer the family from the identity's name shape
        const std::string& e0 = g.elements[static_cast<size_t>(g.identity)];
        if (e0 == "r0") return natural_action(g, "dihedral");
        if (e0.find_first_not_of("0123456789") == std::string::npos) {
            if (e0.size() > 1) return natural_action(g, "symmetric");
            if (e0 == "0") return natural_action(g, "cyclic");
        }
        throw UnknownSpec("this group has no natural action; use regular");
    }
    if (spec.rfind("quotient:", 0) == 0) return quotient_action(g, spec.substr(9));
    throw UnknownSpec("unrecognised action spec '" + spec + "'");
}

FunctionalInstance gen_configuration(const FiniteGroupTable& g, const GroupAction& a) {
    return instance_of_action(g, a, false);
}

FunctionalInstance gen_abelian_extension(const FiniteGroupTable& g, const GroupAction& a) {
    return instance_of_action(g, a, true);
}

ConfigPoints gen_matroid_instance(int p, int m) {
    if (!is_prime(p)) throw InvalidParams("p must be prime");
    if (m < 1) throw InvalidParams("m must be at least 1");
    const int n = 3 * m;
    LinearMatroid mat(p, n);
    auto block = [&](int offset, std::vector<int> offsets) {
        std::vector<FpVector> vecs;
        for (int i = 0; i < m; ++i) {
            FpVector v(n, 0);
            v[static_cast<size_t>(offset + i)] = 1;
            for (int extra : offsets) v[static_cast<size_t>(extra + i)] = 1;
            vecs.push_back(std::move(v));
        }
        return vecs;
    };
    mat.add_point("a1", block(0, {}));          // g1
    mat.add_point("a2", block(m, {}));          // g2
    mat.add_point("a3", block(0, {m}));         // g1+g2
    mat.add_point("x2", block(2 * m, {}));      // x
    mat.add_point("x3", block(0, {2 * m}));     // g1+x
    mat.add_point("x1", block(0, {m, 2 * m}));  // g1+g2+x
    mat.add_point("x4", block(m, {2 * m}));     // g2+x

    ConfigPoints cfg{std::move(mat), {"a1", "a2", "a3", "x1", "x2", "x3", "x4"}, {}, m, m};
    cfg.check_well_formed();
    return cfg;
}

} // namespace gcfg
