#include "gcfg/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "parallel.hpp"

namespace gcfg {

namespace {

std::string pair_witness(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

std::string triple_witness(const std::string& a, const std::string& b, const std::string& c) {
    return "(" + a + "," + b + "," + c + ")";
}

// Lookup table from mapping to family/class position.
std::map<std::vector<int>, size_t> function_index(const std::vector<Bijection>& fns) {
    std::map<std::vector<int>, size_t> idx;
    for (size_t i = 0; i < fns.size(); ++i) idx.emplace(fns[i].map, i);
    return idx;
}

} // namespace

ClosureReport closure_check(const Families& fams) {
    const FunctionFamily& L = fams.L;
    const FunctionFamily& K = fams.K;
    const FunctionFamily& H = fams.H;
    if (L.cod != K.dom || L.dom != H.dom || K.cod != H.cod)
        throw SortMismatch("family signatures do not compose: L:" + L.dom + "->" + L.cod +
                           ", K:" + K.dom + "->" + K.cod + ", H:" + H.dom + "->" + H.cod);

    auto h_set = function_index(H.fns);
    auto l_set = function_index(L.fns);
    auto k_set = function_index(K.fns);
    ClosureReport rep;

    ClosureClause c1{"kl_in_h", true, 0, ""};
    for (size_t ki = 0; ki < K.size() && c1.pass; ++ki)
        for (size_t li = 0; li < L.size(); ++li) {
            ++c1.checked;
            if (!h_set.count(compose(K.fns[ki], L.fns[li]).map)) {
                c1.pass = false;
                c1.witness = pair_witness(K.params[ki], L.params[li]);
                break;
            }
        }

    ClosureClause c2{"hk_gives_l", true, 0, ""};
    for (size_t hi = 0; hi < H.size() && c2.pass; ++hi)
        for (size_t ki = 0; ki < K.size(); ++ki) {
            ++c2.checked;
            if (!l_set.count(compose(inverse(K.fns[ki]), H.fns[hi]).map)) {
                c2.pass = false;
                c2.witness = pair_witness(H.params[hi], K.params[ki]);
                break;
            }
        }

    ClosureClause c3{"lh_gives_k", true, 0, ""};
    for (size_t li = 0; li < L.size() && c3.pass; ++li)
        for (size_t hi = 0; hi < H.size(); ++hi) {
            ++c3.checked;
            if (!k_set.count(compose(H.fns[hi], inverse(L.fns[li])).map)) {
                c3.pass = false;
                c3.witness = pair_witness(L.params[li], H.params[hi]);
                break;
            }
        }

    rep.pass = c1.pass && c2.pass && c3.pass;
    rep.clauses = {std::move(c1), std::move(c2), std::move(c3)};
    return rep;
}

PresentationReport presentation_property(const FunctionFamily& L) {
    PresentationReport rep;
    const size_t n = L.size();
    rep.triples = static_cast<long long>(n) * n * n;

    // {l3 . l1^-1 . l2 : required to be some l4}
    std::map<std::vector<int>, size_t> l_set = function_index(L.fns);
    std::vector<Bijection> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = inverse(L.fns[i]);

    auto fails = [&](size_t flat) {
        size_t l3 = flat % n;
        size_t l2 = (flat / n) % n;
        size_t l1 = flat / (n * n);
        Bijection g = compose(L.fns[l3], compose(inv[l1], L.fns[l2]));
        return l_set.count(g.map) == 0;
    };
    auto bad = detail::first_failure(static_cast<size_t>(rep.triples), fails);
    if (bad) {
        rep.holds = false;
        size_t flat = *bad;
        rep.witness = triple_witness(L.params[flat / (n * n)], L.params[(flat / n) % n],
                                     L.params[flat % n]);
    }
    return rep;
}

Reconstruction build_group(const FunctionalInstance& inst) {
    const Sort& sa1 = inst.sort_of(Role::a1);
    int d = inst.designated(Role::a1);
    return build_group(inst, sa1.elems[static_cast<size_t>(d >= 0 ? d : 0)]);
}

Reconstruction build_group(const FunctionalInstance& inst, const std::string& anchor_a) {
    Families fams = extract_families(inst);
    const FunctionFamily& L = fams.L;
    const Sort& sa1 = inst.sort_of(Role::a1);
    auto it = sa1.index.find(anchor_a);
    if (it == sa1.index.end())
        throw AnchorOutOfSort("anchor '" + anchor_a + "' is not in sort " + sa1.name);
    const size_t anchor = static_cast<size_t>(it->second);

    Bijection anchor_inv = inverse(L.fns[anchor]);

    // Enumerate l_a^-1 l_{a'} over the parameter sort, collapsing equal
    // functions.
    Reconstruction rec;
    rec.anchor = anchor_a;
    std::map<std::vector<int>, size_t> class_of;
    for (size_t i = 0; i < L.size(); ++i) {
        Bijection f = compose(anchor_inv, L.fns[i]);
        auto found = class_of.find(f.map);
        if (found == class_of.end()) {
            class_of.emplace(f.map, rec.classes.size());
            rec.classes.push_back(GermClass{std::move(f), {L.params[i]}});
        } else {
            rec.classes[found->second].params.push_back(L.params[i]);
        }
    }

    const size_t n = rec.classes.size();
    FiniteGroupTable& g = rec.group;
    for (const auto& c : rec.classes) g.elements.push_back(c.canonical());
    g.mul.assign(n, std::vector<int>(n, -1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Bijection prod = compose(rec.classes[i].fn, rec.classes[j].fn);
            auto found = class_of.find(prod.map);
            if (found == class_of.end())
                throw ClosureEscape("product " + g.elements[i] + " * " + g.elements[j] +
                                    " leaves the germ classes; the instance violates the "
                                    "presentation property");
            g.mul[i][j] = static_cast<int>(found->second);
        }
    {
        Bijection id = identity_bijection(L.dom, rec.classes.empty()
                                                     ? 0
                                                     : rec.classes[0].fn.map.size());
        auto found = class_of.find(id.map);
        if (found == class_of.end())
            throw ClosureEscape("identity germ is missing from the classes");
        g.identity = static_cast<int>(found->second);
    }
    g.inverse.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        auto found = class_of.find(inverse(rec.classes[i].fn).map);
        if (found == class_of.end())
            throw ClosureEscape("inverse of " + g.elements[i] + " leaves the germ classes");
        g.inverse[i] = static_cast<int>(found->second);
    }

    // The action on the x2 sort is the germ function itself.
    GroupAction& act = rec.action;
    act.set_elems = inst.sort_of(Role::x2).elems;
    act.act.reserve(n);
    for (const auto& c : rec.classes) act.act.push_back(c.fn.map);
    std::vector<char> orbit(act.set_elems.size(), 0);
    for (size_t i = 0; i < n; ++i) orbit[static_cast<size_t>(act.act[i][0])] = 1;
    act.transitive = std::find(orbit.begin(), orbit.end(), 0) == orbit.end();
    act.separates_points = true;  // classes are distinct functions by construction
    return rec;
}

bool check_transitivity(const GroupAction& action) { return action.transitive; }

AbClaimReport ab_claim(const FunctionFamily& H) {
    AbClaimReport rep;
    const size_t n = H.size();
    rep.triples = static_cast<long long>(n) * n * n;
    std::vector<Bijection> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = inverse(H.fns[i]);

    auto fails = [&](size_t flat) {
        size_t h3 = flat % n;
        size_t h2 = (flat / n) % n;
        size_t h1 = flat / (n * n);
        Bijection lhs = compose(H.fns[h1], compose(inv[h2], H.fns[h3]));
        Bijection rhs = compose(H.fns[h3], compose(inv[h2], H.fns[h1]));
        return lhs.map != rhs.map;
    };
    auto bad = detail::first_failure(static_cast<size_t>(rep.triples), fails);
    if (bad) {
        rep.holds = false;
        size_t flat = *bad;
        rep.witness = triple_witness(H.params[flat / (n * n)], H.params[(flat / n) % n],
                                     H.params[flat % n]);
    }
    return rep;
}

bool check_abelian(const FiniteGroupTable& g) { return is_abelian(g); }

FaithfulnessReport faithfulness_report(const FunctionalInstance& inst) {
    Families fams = extract_families(inst);
    auto classes = germ_classes(fams.L);
    FaithfulnessReport rep;
    rep.param_count = fams.L.size();
    rep.class_count = classes.size();
    for (const auto& c : classes) rep.class_sizes.push_back(c.params.size());
    std::sort(rep.class_sizes.begin(), rep.class_sizes.end());
    rep.faithful = rep.class_count == rep.param_count;
    if (!rep.class_sizes.empty() && rep.class_sizes.front() == rep.class_sizes.back())
        rep.kernel_size = rep.class_sizes.front();
    return rep;
}

FunctionalInstance instance_of_action(const FiniteGroupTable& g, const GroupAction& a,
                                      bool with_abelian_tables) {
    if (!a.transitive) throw NotTransitive("the action is not transitive");
    if (with_abelian_tables && !is_abelian(g))
        throw NotAbelian("abelian tables need a commutative group");

    Sort sg("G", g.elements);
    Sort sx("X", a.set_elems);
    std::vector<Sort> sorts = {sg, sx};
    std::array<int, 7> roles{};
    roles[static_cast<int>(Role::a1)] = 0;
    roles[static_cast<int>(Role::a2)] = 0;
    roles[static_cast<int>(Role::a3)] = 0;
    roles[static_cast<int>(Role::x1)] = 1;
    roles[static_cast<int>(Role::x2)] = 1;
    roles[static_cast<int>(Role::x3)] = 1;
    roles[static_cast<int>(Role::x4)] = with_abelian_tables ? 1 : -1;
    FunctionalInstance inst(std::move(sorts), roles);

    const int n = static_cast<int>(g.order());
    const int m = static_cast<int>(a.set_elems.size());
    std::vector<std::array<int, 3>> fmul;
    fmul.reserve(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) fmul.push_back({u, v, g.times(u, v)});
    std::vector<std::array<int, 3>> facts;
    facts.reserve(static_cast<size_t>(n) * m);
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < m; ++x)
            facts.push_back({u, x, a.act[static_cast<size_t>(u)][static_cast<size_t>(x)]});

    inst.set_table(TableKind::F, fmul);
    inst.set_table(TableKind::L, facts);
    inst.set_table(TableKind::H, facts);
    inst.set_table(TableKind::K, facts);
    if (with_abelian_tables) {
        inst.set_table(TableKind::R, facts);
        inst.set_table(TableKind::S, facts);
    }

    const std::string& e = g.elements[static_cast<size_t>(g.identity)];
    const std::string& x0 = a.set_elems[0];
    inst.set_designated(Role::a1, e);
    inst.set_designated(Role::a2, e);
    inst.set_designated(Role::a3, e);
    inst.set_designated(Role::x1, x0);
    inst.set_designated(Role::x2, x0);
    inst.set_designated(Role::x3, x0);
    if (with_abelian_tables) inst.set_designated(Role::x4, x0);
    return inst;
}

EmittedConfig emit_g_configuration(const FunctionalInstance& inst, const std::string& anchor_a,
                                   const std::string& anchor_b) {
    if (!inst.has_designated())
        throw PreconditionFailure("the instance has no designated configuration points");
    const Sort& sa3 = inst.sort_of(Role::a3);
    auto bit = sa3.index.find(anchor_b);
    if (bit == sa3.index.end())
        throw AnchorOutOfSort("anchor '" + anchor_b + "' is not in sort " + sa3.name);
    const size_t b = static_cast<size_t>(bit->second);

    Reconstruction rec = build_group(inst, anchor_a);
    Families fams = extract_families(inst);
    const Sort& sa1 = inst.sort_of(Role::a1);
    const size_t a = static_cast<size_t>(sa1.index.at(anchor_a));

    // Designated points must satisfy the table relations.
    DenseFn F = inst.function(TableKind::F);
    DenseFn L = inst.function(TableKind::L);
    DenseFn H = inst.function(TableKind::H);
    DenseFn K = inst.function(TableKind::K);
    const int da1 = inst.designated(Role::a1), da2 = inst.designated(Role::a2),
              da3 = inst.designated(Role::a3), dx1 = inst.designated(Role::x1),
              dx2 = inst.designated(Role::x2), dx3 = inst.designated(Role::x3);
    if (F(da2, da1) != da3 || L(da1, dx2) != dx3 || H(da3, dx2) != dx1 || K(da2, dx3) != dx1)
        throw PreconditionFailure("designated points do not satisfy the configuration relations");

    std::map<std::vector<int>, size_t> class_of;
    for (size_t i = 0; i < rec.classes.size(); ++i) class_of.emplace(rec.classes[i].fn.map, i);
    auto locate = [&](const Bijection& f, const char* what) -> size_t {
        auto it = class_of.find(f.map);
        if (it == class_of.end())
            throw ClosureEscape(std::string(what) + " is not a germ class of the group");
        return it->second;
    };

    Bijection la_inv = inverse(fams.L.fns[a]);
    size_t g1 = locate(compose(la_inv, fams.L.fns[static_cast<size_t>(da1)]), "g1");
    size_t g2 = locate(compose(inverse(fams.H.fns[b]),
                               compose(fams.K.fns[static_cast<size_t>(da2)], fams.L.fns[a])),
                       "g2");
    size_t g3 = static_cast<size_t>(rec.group.times(static_cast<int>(g2), static_cast<int>(g1)));

    EmittedConfig out{instance_of_action(rec.group, rec.action), "", "", "", "", "", ""};
    const auto& xelems = inst.sort_of(Role::x2).elems;
    int y2 = dx2;
    int y3 = la_inv.apply(dx3);
    int y1 = inverse(fams.H.fns[b]).apply(dx1);
    out.g1 = rec.group.elements[g1];
    out.g2 = rec.group.elements[g2];
    out.g3 = rec.group.elements[g3];
    out.y1 = xelems[static_cast<size_t>(y1)];
    out.y2 = xelems[static_cast<size_t>(y2)];
    out.y3 = xelems[static_cast<size_t>(y3)];
    out.g3_y2_is_y1 = rec.action.act[g3][static_cast<size_t>(y2)] == y1;
    out.g1_y2_is_y3 = rec.action.act[g1][static_cast<size_t>(y2)] == y3;

    out.instance.set_designated(Role::a1, out.g1);
    out.instance.set_designated(Role::a2, out.g2);
    out.instance.set_designated(Role::a3, out.g3);
    out.instance.set_designated(Role::x1, out.y1);
    out.instance.set_designated(Role::x2, out.y2);
    out.instance.set_designated(Role::x3, out.y3);
    return out;
}

} // namespace gcfg
