#include "gcfg/configuration.hpp"

#include <sstream>

namespace gcfg {

const char* role_name(Role r) {
    switch (r) {
        case Role::a1: return "a1";
        case Role::a2: return "a2";
        case Role::a3: return "a3";
        case Role::x1: return "x1";
        case Role::x2: return "x2";
        case Role::x3: return "x3";
        case Role::x4: return "x4";
    }
    return "?";
}

void ConfigPoints::check_well_formed() const {
    for (Role r : kAllRoles) {
        if (r == Role::x4 && !has_x4()) continue;
        const auto& l = label(r);
        if (l.empty())
            throw IncompleteConfig(std::string("role ") + role_name(r) + " is unbound");
        if (!matroid.has_point(l))
            throw UnknownPoint("role " + std::string(role_name(r)) +
                               " is bound to unknown point '" + l + "'");
    }
    for (const auto& b : base)
        if (!matroid.has_point(b)) throw UnknownPoint("base label '" + b + "' is unknown");
    if (k < 0 || m < k)
        throw InvalidParams("declared dimensions must satisfy m >= k >= 0, got m=" +
                            std::to_string(m) + " k=" + std::to_string(k));
}

const ClauseCheck* ClauseReport::first_failure() const {
    for (const auto& c : clauses)
        if (!c.pass) return &c;
    return nullptr;
}

void ClauseReport::add(ClauseCheck c) {
    pass = pass && c.pass;
    clauses.push_back(std::move(c));
}

namespace {

struct Ctx {
    const ConfigPoints& cfg;
    std::array<std::string, 7> lab;  // resolved labels per role slot

    std::vector<std::string> with_base(std::initializer_list<Role> extra) const {
        std::vector<std::string> out = cfg.base;
        for (Role r : extra) out.push_back(lab[static_cast<int>(r)]);
        return out;
    }
    std::vector<std::string> tuple(std::initializer_list<Role> roles) const {
        std::vector<std::string> out;
        for (Role r : roles) out.push_back(lab[static_cast<int>(r)]);
        return out;
    }
};

void check_dim(ClauseReport& rep, const Ctx& c, const std::string& id,
               std::initializer_list<Role> tuple, std::initializer_list<Role> over,
               int expected) {
    ClauseCheck chk;
    chk.id = id;
    chk.expected = expected;
    chk.measured = c.cfg.matroid.dim_over(c.tuple(tuple), c.with_base(over));
    chk.pass = chk.measured == expected;
    if (!chk.pass) {
        std::ostringstream os;
        os << "dim = " << chk.measured << ", expected " << expected;
        chk.detail = os.str();
    }
    rep.add(std::move(chk));
}

void check_interdef(ClauseReport& rep, const Ctx& c, const std::string& id, Role a, Role b,
                    std::initializer_list<Role> over) {
    ClauseCheck chk;
    chk.id = id;
    chk.expected = -1;
    chk.measured = -1;
    chk.pass = c.cfg.matroid.interdefinable(c.lab[static_cast<int>(a)],
                                            c.lab[static_cast<int>(b)], c.with_base(over));
    if (!chk.pass) chk.detail = "spans differ";
    rep.add(std::move(chk));
}

// The clause sweep, parametrised by the x-slot assignment so the abelian
// re-roll can reuse it.
ClauseReport run_clauses(const ConfigPoints& cfg, std::array<std::string, 7> lab,
                         const std::string& prefix) {
    Ctx c{cfg, lab};
    const int m = cfg.m, k = cfg.k;
    ClauseReport rep;

    // (i) node dimensions
    for (Role r : {Role::a1, Role::a2, Role::a3})
        check_dim(rep, c, prefix + "i." + role_name(r), {r}, {}, m);
    for (Role r : {Role::x1, Role::x2, Role::x3})
        check_dim(rep, c, prefix + "i." + role_name(r), {r}, {}, k);

    // (ii) joint dimensions
    check_dim(rep, c, prefix + "ii.x1x2x3", {Role::x1, Role::x2, Role::x3}, {}, 3 * k);
    check_dim(rep, c, prefix + "ii.a1a2", {Role::a1, Role::a2}, {}, 2 * m);
    check_dim(rep, c, prefix + "ii.a1a3", {Role::a1, Role::a3}, {}, 2 * m);
    check_dim(rep, c, prefix + "ii.a2a3", {Role::a2, Role::a3}, {}, 2 * m);
    check_dim(rep, c, prefix + "ii.a1a2a3", {Role::a1, Role::a2, Role::a3}, {}, 2 * m);

    // (iii) co-linear point pairs over the opposite group node
    check_dim(rep, c, prefix + "iii.x2x3|a1", {Role::x2, Role::x3}, {Role::a1}, k);
    check_dim(rep, c, prefix + "iii.x1x2|a3", {Role::x1, Role::x2}, {Role::a3}, k);
    check_dim(rep, c, prefix + "iii.x1x3|a2", {Role::x1, Role::x3}, {Role::a2}, k);

    // (iv) mixed triples
    const std::array<std::array<Role, 2>, 3> apairs = {{{Role::a1, Role::a2},
                                                        {Role::a1, Role::a3},
                                                        {Role::a2, Role::a3}}};
    for (auto [ai, aj] : apairs)
        for (Role xt : {Role::x1, Role::x2, Role::x3}) {
            std::string id = std::string(prefix) + "iv." + role_name(ai) + role_name(aj) +
                             "." + role_name(xt);
            check_dim(rep, c, id, {ai, aj, xt}, {}, 2 * m + k);
        }
    const std::array<std::array<Role, 3>, 6> axx = {{{Role::a1, Role::x1, Role::x2},
                                                     {Role::a1, Role::x1, Role::x3},
                                                     {Role::a2, Role::x2, Role::x1},
                                                     {Role::a2, Role::x2, Role::x3},
                                                     {Role::a3, Role::x3, Role::x1},
                                                     {Role::a3, Role::x3, Role::x2}}};
    for (auto [ai, xi, xj] : axx) {
        std::string id = std::string(prefix) + "iv." + role_name(ai) + "." + role_name(xi) +
                         role_name(xj);
        check_dim(rep, c, id, {ai, xi, xj}, {}, m + 2 * k);
    }

    // co-linear inter-definability: the x-pairs over their line's a-node,
    // and each a-node definable from the other two.
    check_interdef(rep, c, prefix + "colinear.x2x3|a1", Role::x2, Role::x3, {Role::a1});
    check_interdef(rep, c, prefix + "colinear.x1x2|a3", Role::x1, Role::x2, {Role::a3});
    check_interdef(rep, c, prefix + "colinear.x1x3|a2", Role::x1, Role::x3, {Role::a2});
    const std::array<std::array<Role, 3>, 3> aline = {{{Role::a1, Role::a2, Role::a3},
                                                       {Role::a2, Role::a1, Role::a3},
                                                       {Role::a3, Role::a1, Role::a2}}};
    for (auto [ai, aj, at] : aline) {
        std::string id = std::string(prefix) + "colinear." + role_name(ai) + "|" +
                         role_name(aj) + role_name(at);
        check_dim(rep, c, id, {ai}, {aj, at}, 0);
    }
    return rep;
}

} // namespace

ClauseReport validate_mk(const ConfigPoints& cfg) {
    cfg.check_well_formed();
    return run_clauses(cfg, cfg.labels, "");
}

ClauseReport validate_abelian_node(const ConfigPoints& cfg) {
    cfg.check_well_formed();
    if (!cfg.has_x4()) throw IncompleteConfig("abelian check requires a bound x4 node");

    Ctx c{cfg, cfg.labels};
    ClauseReport rep;
    check_dim(rep, c, "x4.dim", {Role::x4}, {}, cfg.k);
    check_interdef(rep, c, "x4.colinear.x1x4|a1", Role::x1, Role::x4, {Role::a1});
    check_interdef(rep, c, "x4.colinear.x2x4|a2", Role::x2, Role::x4, {Role::a2});

    // Six points (a1,a2,a3,x2,x4,x1) as a configuration: the lines
    // (a1;x4,x1) and (a2;x2,x4) force x1-slot<-x2, x2-slot<-x1, x3-slot<-x4.
    std::array<std::string, 7> re = cfg.labels;
    re[static_cast<int>(Role::x1)] = cfg.label(Role::x2);
    re[static_cast<int>(Role::x2)] = cfg.label(Role::x1);
    re[static_cast<int>(Role::x3)] = cfg.label(Role::x4);
    ClauseReport inner = run_clauses(cfg, re, "x4.reroll.");
    for (auto& cl : inner.clauses) rep.add(std::move(cl));
    return rep;
}

} // namespace gcfg
