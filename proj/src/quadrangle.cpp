#include "gcfg/quadrangle.hpp"

#include <algorithm>
#include <map>

namespace gcfg {

std::string QuadRelation::tuple_str(const std::array<int, 4>& t) const {
    std::string out = "(";
    for (int c = 0; c < 4; ++c) {
        if (c) out += ",";
        out += coord(c).elems[static_cast<size_t>(t[c])];
    }
    return out + ")";
}

namespace {

struct QuadIndex {
    const QuadRelation& q;
    std::array<size_t, 4> n;
    std::vector<char> member;  // flat membership over the coordinate product
    // tuples grouped by the value pair at two fixed coordinates
    std::map<std::pair<int, int>, std::vector<size_t>> by12, by14, by13, by34, by23, by24;

    explicit QuadIndex(const QuadRelation& q_) : q(q_) {
        for (int c = 0; c < 4; ++c) n[c] = q.coord(c).size();
        member.assign(n[0] * n[1] * n[2] * n[3], 0);
        for (size_t t = 0; t < q.tuples.size(); ++t) {
            const auto& tu = q.tuples[t];
            member[flat(tu)] = 1;
            by12[{tu[0], tu[1]}].push_back(t);
            by14[{tu[0], tu[3]}].push_back(t);
            by13[{tu[0], tu[2]}].push_back(t);
            by34[{tu[2], tu[3]}].push_back(t);
            by23[{tu[1], tu[2]}].push_back(t);
            by24[{tu[1], tu[3]}].push_back(t);
        }
    }

    size_t flat(const std::array<int, 4>& t) const {
        return ((static_cast<size_t>(t[0]) * n[1] + t[1]) * n[2] + t[2]) * n[3] + t[3];
    }
    bool has(const std::array<int, 4>& t) const { return member[flat(t)] != 0; }
};

// Fiber of the pattern fixing coordinates (c1, c2); the remaining two
// coordinates (d1 < d2) must trace a bijection graph for every value pair.
FiberCheck check_fiber(const QuadRelation& q, const QuadIndex& ix, int c1, int c2) {
    int d1 = -1, d2 = -1;
    for (int c = 0; c < 4; ++c)
        if (c != c1 && c != c2) (d1 < 0 ? d1 : d2) = c;
    FiberCheck chk;
    chk.pattern = std::to_string(c1 + 1) + std::to_string(c2 + 1) + "->" +
                  std::to_string(d1 + 1) + std::to_string(d2 + 1);
    const size_t nd1 = ix.n[static_cast<size_t>(d1)], nd2 = ix.n[static_cast<size_t>(d2)];
    if (nd1 != nd2) {
        chk.pass = false;
        chk.witness = "coordinate sorts " + q.coord(d1).name + " and " + q.coord(d2).name +
                      " have different sizes";
        return chk;
    }
    const auto& groups = (c2 == 1) ? ix.by12 : (c2 == 2 ? ix.by13 : ix.by14);
    for (size_t v1 = 0; v1 < ix.n[static_cast<size_t>(c1)] && chk.pass; ++v1)
        for (size_t v2 = 0; v2 < ix.n[static_cast<size_t>(c2)]; ++v2) {
            auto it = groups.find({static_cast<int>(v1), static_cast<int>(v2)});
            const size_t count = it == groups.end() ? 0 : it->second.size();
            std::vector<char> dom(nd1, 0), cod(nd2, 0);
            bool ok = count == nd1;
            if (ok)
                for (size_t t : it->second) {
                    const auto& tu = q.tuples[t];
                    if (dom[static_cast<size_t>(tu[d1])] || cod[static_cast<size_t>(tu[d2])]) {
                        ok = false;
                        break;
                    }
                    dom[static_cast<size_t>(tu[d1])] = 1;
                    cod[static_cast<size_t>(tu[d2])] = 1;
                }
            if (!ok) {
                chk.pass = false;
                chk.witness = "fiber at (" + q.coord(c1).elems[v1] + "," +
                              q.coord(c2).elems[v2] + ") is not a bijection graph";
                break;
            }
        }
    return chk;
}

// One closure axiom: t1 shares the coordinate pair P1 with t0, t2 shares
// P2, and the recombined tuple must again belong to the relation.  The
// recombination takes coordinates of P1 from t2 and of P2 from t1.
QuadAxiom check_axiom(const QuadRelation& q, const QuadIndex& ix, const std::string& name,
                      std::array<int, 2> p1, std::array<int, 2> p2) {
    QuadAxiom ax;
    ax.name = name;
    auto groups_for = [&](std::array<int, 2> p)
        -> const std::map<std::pair<int, int>, std::vector<size_t>>& {
        if (p == std::array<int, 2>{2, 3}) return ix.by34;
        if (p == std::array<int, 2>{0, 1}) return ix.by12;
        if (p == std::array<int, 2>{1, 2}) return ix.by23;
        if (p == std::array<int, 2>{0, 3}) return ix.by14;
        if (p == std::array<int, 2>{0, 2}) return ix.by13;
        return ix.by24;
    };
    const auto& g1 = groups_for(p1);
    const auto& g2 = groups_for(p2);

    struct Fail {
        size_t t0, t1, t2;
        std::array<int, 4> conc;
    };
    std::optional<Fail> first;
    long long checked = 0;
    for (size_t t0 = 0; t0 < q.tuples.size() && !first; ++t0) {
        const auto& a = q.tuples[t0];
        auto it1 = g1.find({a[p1[0]], a[p1[1]]});
        auto it2 = g2.find({a[p2[0]], a[p2[1]]});
        if (it1 == g1.end() || it2 == g2.end()) continue;
        for (size_t t1 : it1->second) {
            const auto& b = q.tuples[t1];
            for (size_t t2 : it2->second) {
                const auto& c = q.tuples[t2];
                ++checked;
                std::array<int, 4> conc = a;
                // coordinates outside P1 come from t1, outside P2 from t2
                for (int cd = 0; cd < 4; ++cd) {
                    if (cd != p1[0] && cd != p1[1]) conc[cd] = b[cd];
                }
                for (int cd = 0; cd < 4; ++cd) {
                    if (cd != p2[0] && cd != p2[1]) {
                        // t2 replaces the P1 coordinates
                        if (cd == p1[0] || cd == p1[1]) conc[cd] = c[cd];
                    }
                }
                if (!ix.has(conc)) {
                    first = Fail{t0, t1, t2, conc};
                    break;
                }
            }
            if (first) break;
        }
    }
    ax.checked = checked;
    if (first) {
        ax.pass = false;
        ax.witness = "premises " + q.tuple_str(q.tuples[first->t0]) + "," +
                     q.tuple_str(q.tuples[first->t1]) + "," + q.tuple_str(q.tuples[first->t2]) +
                     " but " + q.tuple_str(first->conc) + " is missing";
    }
    return ax;
}

} // namespace

AxiomReport validate_quadrangle(const QuadRelation& q) {
    QuadIndex ix(q);
    AxiomReport rep;
    rep.fibers[0] = check_fiber(q, ix, 0, 1);
    rep.fibers[1] = check_fiber(q, ix, 0, 3);
    rep.fibers[2] = check_fiber(q, ix, 0, 2);
    rep.fibers_pass = rep.fibers[0].pass && rep.fibers[1].pass && rep.fibers[2].pass;

    // (i): second premise shares (3,4), third shares (1,2).
    rep.axioms[0] = check_axiom(q, ix, "i", {2, 3}, {0, 1});
    // (ii): shares (2,3) and (1,4).
    rep.axioms[1] = check_axiom(q, ix, "ii", {1, 2}, {0, 3});
    // (iii): shares (1,3) and (2,4); the abelian axiom.
    rep.axioms[2] = check_axiom(q, ix, "iii", {0, 2}, {1, 3});

    rep.pass = rep.fibers_pass && rep.axioms[0].pass && rep.axioms[1].pass &&
               (!q.abelian_claimed || rep.axioms[2].pass);
    return rep;
}

namespace {

QuadFamilies::Entry build_entry(const QuadRelation& q, const QuadIndex& ix, int c1, int c2,
                                int dom, int cod) {
    const auto& groups = (c2 == 1) ? ix.by12 : (c2 == 2 ? ix.by13 : ix.by14);
    QuadFamilies::Entry entry;
    const size_t nd = ix.n[static_cast<size_t>(dom)];
    std::map<std::vector<int>, size_t> seen;
    for (size_t v1 = 0; v1 < ix.n[static_cast<size_t>(c1)]; ++v1)
        for (size_t v2 = 0; v2 < ix.n[static_cast<size_t>(c2)]; ++v2) {
            auto it = groups.find({static_cast<int>(v1), static_cast<int>(v2)});
            Bijection b;
            b.dom = q.coord(dom).name;
            b.cod = q.coord(cod).name;
            b.map.assign(nd, -1);
            if (it != groups.end())
                for (size_t t : it->second) {
                    const auto& tu = q.tuples[t];
                    b.map[static_cast<size_t>(tu[dom])] = tu[cod];
                }
            if (!is_bijective_map(b.map, ix.n[static_cast<size_t>(cod)]))
                throw FiberNotBijective("fiber at (" + q.coord(c1).elems[v1] + "," +
                                        q.coord(c2).elems[v2] + ") is not a bijection");
            auto cls = seen.find(b.map);
            size_t cls_idx;
            if (cls == seen.end()) {
                cls_idx = entry.classes.size();
                seen.emplace(b.map, cls_idx);
                entry.classes.emplace_back();
            } else {
                cls_idx = cls->second;
            }
            entry.classes[cls_idx].push_back(entry.params.size());
            entry.class_of.push_back(cls_idx);
            entry.params.emplace_back(q.coord(c1).elems[v1], q.coord(c2).elems[v2]);
            entry.fns.push_back(std::move(b));
        }
    return entry;
}

} // namespace

QuadFamilies extract_quad_functions(const QuadRelation& q) {
    QuadIndex ix(q);
    QuadFamilies fam;
    fam.h = build_entry(q, ix, 0, 1, 2, 3);  // fix (a1,a2): x1 -> x2
    fam.l = build_entry(q, ix, 0, 3, 1, 2);  // fix (a1,x2): a2 -> x1
    AxiomReport rep = validate_quadrangle(q);
    if (rep.axioms[2].pass) fam.s = build_entry(q, ix, 0, 2, 1, 3);  // fix (a1,x1): a2 -> x2
    return fam;
}

namespace {

std::string class_elem_name(const char* fam, const QuadFamilies::Entry& e, size_t cls) {
    const auto& p = e.params[e.classes[cls].front()];
    return std::string(fam) + "(" + p.first + "," + p.second + ")";
}

} // namespace

FunctionalInstance quad_to_config(const QuadRelation& q) {
    AxiomReport rep = validate_quadrangle(q);
    if (!rep.fibers_pass || !rep.axioms[0].pass || !rep.axioms[1].pass) {
        std::string why = !rep.fibers_pass
                              ? rep.fibers[0].pass ? (rep.fibers[1].pass ? rep.fibers[2].witness
                                                                         : rep.fibers[1].witness)
                                                   : rep.fibers[0].witness
                              : (rep.axioms[0].pass ? rep.axioms[1].witness
                                                    : rep.axioms[0].witness);
        throw AxiomFailure("quadrangle axioms fail: " + why);
    }
    const bool abelian = rep.axioms[2].pass;
    QuadFamilies fam = extract_quad_functions(q);

    // Sorts: coordinate sorts are reused; germ-class sorts are fresh.
    std::vector<Sort> sorts;
    std::map<std::string, int> sort_idx;
    auto intern = [&](const Sort& s) {
        auto it = sort_idx.find(s.name);
        if (it != sort_idx.end()) return it->second;
        int idx = static_cast<int>(sorts.size());
        sorts.push_back(s);
        sort_idx.emplace(s.name, idx);
        return idx;
    };
    int sa1 = intern(q.coord(0));
    int sa2 = intern(q.coord(1));
    int sx1 = intern(q.coord(2));
    int sx2 = intern(q.coord(3));

    auto class_sort = [&](const char* name, const char* famtag,
                          const QuadFamilies::Entry& e) {
        std::string sname = name;
        while (sort_idx.count(sname)) sname += "_";
        std::vector<std::string> elems;
        for (size_t c = 0; c < e.classes.size(); ++c)
            elems.push_back(class_elem_name(famtag, e, c));
        return intern(Sort(sname, elems));
    };
    int sa3 = class_sort("h_classes", "h", fam.h);
    int sx3 = class_sort("l_classes", "l", fam.l);
    int sx4 = abelian && fam.s ? class_sort("s_classes", "s", *fam.s) : -1;

    std::array<int, 7> roles{};
    roles[static_cast<int>(Role::a1)] = sa1;
    roles[static_cast<int>(Role::a2)] = sa2;
    roles[static_cast<int>(Role::a3)] = sa3;
    roles[static_cast<int>(Role::x1)] = sx1;
    roles[static_cast<int>(Role::x2)] = sx2;
    roles[static_cast<int>(Role::x3)] = sx3;
    roles[static_cast<int>(Role::x4)] = sx4;
    FunctionalInstance inst(sorts, roles);

    const size_t n1 = q.coord(0).size(), n2 = q.coord(1).size(), nx = q.coord(3).size();

    // F(a2', a1') = [h_{a1' a2'}]; h-parameters are enumerated (a1, a2).
    std::vector<std::array<int, 3>> ftr;
    for (size_t u = 0; u < n2; ++u)
        for (size_t v = 0; v < n1; ++v)
            ftr.push_back({static_cast<int>(u), static_cast<int>(v),
                           static_cast<int>(fam.h.class_of[v * n2 + u])});
    inst.set_table(TableKind::F, ftr);

    // L(a1', x2') = [l_{a1' x2'}]
    std::vector<std::array<int, 3>> ltr;
    for (size_t u = 0; u < n1; ++u)
        for (size_t x = 0; x < nx; ++x)
            ltr.push_back({static_cast<int>(u), static_cast<int>(x),
                           static_cast<int>(fam.l.class_of[u * nx + x])});
    inst.set_table(TableKind::L, ltr);

    // H([h], x2') = h^-1(x2'): the x1 the class carries to x2'.
    std::vector<std::array<int, 3>> htr;
    for (size_t c = 0; c < fam.h.classes.size(); ++c) {
        Bijection inv = inverse(fam.h.fns[fam.h.classes[c].front()]);
        for (size_t x = 0; x < nx; ++x)
            htr.push_back({static_cast<int>(c), static_cast<int>(x), inv.apply(static_cast<int>(x))});
    }
    inst.set_table(TableKind::H, htr);

    // K(a2', [l]) = l(a2')
    std::vector<std::array<int, 3>> ktr;
    for (size_t u = 0; u < n2; ++u)
        for (size_t c = 0; c < fam.l.classes.size(); ++c) {
            const Bijection& fn = fam.l.fns[fam.l.classes[c].front()];
            ktr.push_back({static_cast<int>(u), static_cast<int>(c), fn.apply(static_cast<int>(u))});
        }
    inst.set_table(TableKind::K, ktr);

    if (sx4 >= 0) {
        const auto& s = *fam.s;
        // R(a1', [s]) = the x1 with s_{a1',x1} in the class.
        std::vector<std::array<int, 3>> rtr;
        for (size_t u = 0; u < n1; ++u)
            for (size_t c = 0; c < s.classes.size(); ++c) {
                int found = -1;
                for (size_t member : s.classes[c]) {
                    const auto& p = s.params[member];  // (a1 id, x1 id)
                    if (p.first == q.coord(0).elems[u]) {
                        if (found >= 0)
                            throw AxiomFailure("s-class is ambiguous over a1=" + p.first);
                        found = q.coord(2).at(p.second);
                    }
                }
                if (found < 0)
                    throw AxiomFailure("s-class misses parameter a1=" + q.coord(0).elems[u]);
                rtr.push_back({static_cast<int>(u), static_cast<int>(c), found});
            }
        inst.set_table(TableKind::R, rtr);

        // S(a2', x2') = the class through a2' -> x2'.
        std::vector<std::array<int, 3>> str;
        for (size_t u = 0; u < n2; ++u)
            for (size_t x = 0; x < nx; ++x) {
                int found = -1;
                for (size_t c = 0; c < s.classes.size(); ++c) {
                    const Bijection& fn = s.fns[s.classes[c].front()];
                    if (fn.apply(static_cast<int>(u)) == static_cast<int>(x)) {
                        if (found >= 0)
                            throw AxiomFailure("two s-classes pass through (" +
                                               q.coord(1).elems[u] + "," +
                                               q.coord(3).elems[x] + ")");
                        found = static_cast<int>(c);
                    }
                }
                if (found < 0)
                    throw AxiomFailure("no s-class passes through (" + q.coord(1).elems[u] +
                                       "," + q.coord(3).elems[x] + ")");
                str.push_back({static_cast<int>(u), static_cast<int>(x), found});
            }
        inst.set_table(TableKind::S, str);
    }

    ValidityReport val = validate_tables(inst);
    if (!val.pass)
        throw AxiomFailure("the induced configuration tables are not fiberwise bijective");

    // Designated points: first elements, closed under the table relations.
    DenseFn F = inst.function(TableKind::F);
    DenseFn L = inst.function(TableKind::L);
    DenseFn H = inst.function(TableKind::H);
    const auto& ss = inst.sorts();
    int da1 = 0, da2 = 0, dx2 = 0;
    int da3 = F(da2, da1);
    int dx3 = L(da1, dx2);
    int dx1 = H(da3, dx2);
    inst.set_designated(Role::a1, ss[static_cast<size_t>(sa1)].elems[static_cast<size_t>(da1)]);
    inst.set_designated(Role::a2, ss[static_cast<size_t>(sa2)].elems[static_cast<size_t>(da2)]);
    inst.set_designated(Role::a3, ss[static_cast<size_t>(sa3)].elems[static_cast<size_t>(da3)]);
    inst.set_designated(Role::x1, ss[static_cast<size_t>(sx1)].elems[static_cast<size_t>(dx1)]);
    inst.set_designated(Role::x2, ss[static_cast<size_t>(sx2)].elems[static_cast<size_t>(dx2)]);
    inst.set_designated(Role::x3, ss[static_cast<size_t>(sx3)].elems[static_cast<size_t>(dx3)]);
    if (sx4 >= 0) {
        DenseFn S = inst.function(TableKind::S);
        inst.set_designated(Role::x4,
                            ss[static_cast<size_t>(sx4)].elems[static_cast<size_t>(S(da2, dx2))]);
    }
    return inst;
}

QuadRelation config_to_quad(const FunctionalInstance& inst) {
    ValidityReport val = validate_tables(inst);
    if (!val.pass) throw PreconditionFailure("instance fails table validation");
    EquationReport master = check_master_equation(inst);
    if (!master.holds) throw PreconditionFailure("instance fails the master equation");

    DenseFn F = inst.function(TableKind::F);
    DenseFn H = inst.function(TableKind::H);

    QuadRelation q;
    q.sorts = inst.sorts();
    q.coord_sort = {inst.sort_index_of(Role::a1), inst.sort_index_of(Role::a2),
                    inst.sort_index_of(Role::x1), inst.sort_index_of(Role::x2)};
    const size_t n1 = inst.sort_of(Role::a1).size();
    const size_t n2 = inst.sort_of(Role::a2).size();
    const size_t nx = inst.sort_of(Role::x2).size();
    for (size_t a1 = 0; a1 < n1; ++a1)
        for (size_t a2 = 0; a2 < n2; ++a2)
            for (size_t x2 = 0; x2 < nx; ++x2) {
                int x1 = H(F(static_cast<int>(a2), static_cast<int>(a1)), static_cast<int>(x2));
                q.tuples.push_back({static_cast<int>(a1), static_cast<int>(a2), x1,
                                    static_cast<int>(x2)});
            }
    std::sort(q.tuples.begin(), q.tuples.end());
    q.abelian_claimed = inst.has_abelian_tables();
    return q;
}

} // namespace gcfg
