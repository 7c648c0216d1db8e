#include "gcfg/finstance.hpp"

#include <algorithm>
#include <sstream>

#include "parallel.hpp"

namespace gcfg {

Sort::Sort(std::string name_, std::vector<std::string> elems_)
    : name(std::move(name_)), elems(std::move(elems_)) {
    if (elems.empty()) throw SchemaError("sort '" + name + "' is empty");
    for (size_t i = 0; i < elems.size(); ++i) {
        if (!index.emplace(elems[i], static_cast<int>(i)).second)
            throw SchemaError("sort '" + name + "' repeats element '" + elems[i] + "'");
    }
}

int Sort::at(const std::string& id) const {
    auto it = index.find(id);
    if (it == index.end())
        throw SchemaError("element '" + id + "' is not in sort '" + name + "'");
    return it->second;
}

const char* table_name(TableKind t) {
    switch (t) {
        case TableKind::F: return "F";
        case TableKind::L: return "L";
        case TableKind::H: return "H";
        case TableKind::K: return "K";
        case TableKind::R: return "R";
        case TableKind::S: return "S";
    }
    return "?";
}

FunctionalInstance::FunctionalInstance(std::vector<Sort> sorts, std::array<int, 7> role_sort)
    : sorts_(std::move(sorts)), role_sort_(role_sort) {
    designated_.fill(-1);
    for (Role r : kAllRoles) {
        int s = role_sort_[static_cast<int>(r)];
        if (r == Role::x4 && s < 0) continue;
        if (s < 0 || s >= static_cast<int>(sorts_.size()))
            throw SchemaError(std::string("role ") + role_name(r) +
                              " is not bound to a sort");
    }
}

const Sort& FunctionalInstance::sort_of(Role r) const {
    int s = role_sort_[static_cast<int>(r)];
    if (s < 0) throw SchemaError(std::string("role ") + role_name(r) + " has no sort");
    return sorts_[static_cast<size_t>(s)];
}

std::array<int, 3> FunctionalInstance::table_signature(TableKind t) const {
    auto s = [&](Role r) { return role_sort_[static_cast<int>(r)]; };
    switch (t) {
        case TableKind::F: return {s(Role::a2), s(Role::a1), s(Role::a3)};
        case TableKind::L: return {s(Role::a1), s(Role::x2), s(Role::x3)};
        case TableKind::H: return {s(Role::a3), s(Role::x2), s(Role::x1)};
        case TableKind::K: return {s(Role::a2), s(Role::x3), s(Role::x1)};
        case TableKind::R: return {s(Role::a1), s(Role::x4), s(Role::x1)};
        case TableKind::S: return {s(Role::a2), s(Role::x2), s(Role::x4)};
    }
    throw Error("unreachable");
}

void FunctionalInstance::set_table(TableKind kind, std::vector<std::array<int, 3>> triples) {
    auto sig = table_signature(kind);
    if (sig[0] < 0 || sig[1] < 0 || sig[2] < 0)
        throw SchemaError(std::string("table ") + table_name(kind) +
                          " needs the x4 sort, which is absent");
    std::array<size_t, 3> bound = {sorts_[sig[0]].size(), sorts_[sig[1]].size(),
                                   sorts_[sig[2]].size()};
    for (const auto& t : triples)
        for (int c = 0; c < 3; ++c)
            if (t[c] < 0 || t[c] >= static_cast<int>(bound[c]))
                throw SchemaError(std::string("table ") + table_name(kind) +
                                  " has an out-of-sort entry");
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    RelTable tab;
    tab.kind = kind;
    tab.s1 = sig[0];
    tab.s2 = sig[1];
    tab.s3 = sig[2];
    tab.triples = std::move(triples);
    tables_[static_cast<int>(kind)] = std::move(tab);
}

void FunctionalInstance::set_designated(Role r, const std::string& elem_id) {
    designated_[static_cast<int>(r)] = sort_of(r).at(elem_id);
}

const RelTable& FunctionalInstance::table(TableKind t) const {
    const auto& opt = tables_[static_cast<int>(t)];
    if (!opt) throw MissingTable(std::string("table ") + table_name(t) + " is absent");
    return *opt;
}

bool FunctionalInstance::has_designated() const {
    for (Role r : {Role::a1, Role::a2, Role::a3, Role::x1, Role::x2, Role::x3})
        if (designated_[static_cast<int>(r)] < 0) return false;
    return true;
}

std::string FunctionalInstance::designated_id(Role r) const {
    int i = designated(r);
    if (i < 0) throw PreconditionFailure(std::string("no designated ") + role_name(r));
    return sort_of(r).elems[static_cast<size_t>(i)];
}

DenseFn FunctionalInstance::function(TableKind t) const {
    const RelTable& tab = table(t);
    DenseFn fn;
    fn.n1 = static_cast<int>(sorts_[tab.s1].size());
    fn.n2 = static_cast<int>(sorts_[tab.s2].size());
    fn.val.assign(static_cast<size_t>(fn.n1) * fn.n2, -1);
    for (const auto& tr : tab.triples) {
        int& cell = fn.val[static_cast<size_t>(tr[0]) * fn.n2 + tr[1]];
        if (cell >= 0)
            throw PreconditionFailure(std::string("table ") + table_name(t) +
                                      " is not functional; validate it first");
        cell = tr[2];
    }
    for (int v : fn.val)
        if (v < 0)
            throw PreconditionFailure(std::string("table ") + table_name(t) +
                                      " is not total; validate it first");
    return fn;
}

namespace {

std::string triple_str(const FunctionalInstance& inst, const RelTable& tab,
                       const std::array<int, 3>& t) {
    const auto& s = inst.sorts();
    return "(" + s[tab.s1].elems[t[0]] + "," + s[tab.s2].elems[t[1]] + "," +
           s[tab.s3].elems[t[2]] + ")";
}

} // namespace

ValidityReport validate_tables(const FunctionalInstance& inst) {
    ValidityReport rep;
    for (TableKind t : kAllTables) {
        if (!inst.has_table(t)) continue;
        const RelTable& tab = inst.table(t);
        const auto& s = inst.sorts();
        const size_t n1 = s[tab.s1].size(), n2 = s[tab.s2].size(), n3 = s[tab.s3].size();

        TableCondition rows{table_name(t), "rows_bijective", true, ""};
        if (n2 != n3) {
            rows.pass = false;
            rows.witness = "sorts " + s[tab.s2].name + " and " + s[tab.s3].name +
                           " have different sizes (" + std::to_string(n2) + " vs " +
                           std::to_string(n3) + ")";
        }
        // Row-by-row bijection check; triples are sorted, rows contiguous.
        std::vector<std::vector<std::array<int, 3>>> by_row(n1);
        for (const auto& tr : tab.triples) by_row[static_cast<size_t>(tr[0])].push_back(tr);
        for (size_t u = 0; u < n1 && rows.pass; ++u) {
            std::vector<const std::array<int, 3>*> arg_seen(n2, nullptr);
            std::vector<const std::array<int, 3>*> val_seen(n3, nullptr);
            for (const auto& tr : by_row[u]) {
                if (arg_seen[tr[1]]) {
                    rows.pass = false;
                    rows.witness = "row not a function: " +
                                   triple_str(inst, tab, *arg_seen[tr[1]]) + "," +
                                   triple_str(inst, tab, tr);
                    break;
                }
                if (val_seen[tr[2]]) {
                    rows.pass = false;
                    rows.witness = "row not injective: " +
                                   triple_str(inst, tab, *val_seen[tr[2]]) + "," +
                                   triple_str(inst, tab, tr);
                    break;
                }
                arg_seen[tr[1]] = &tr;
                val_seen[tr[2]] = &tr;
            }
            if (rows.pass && by_row[u].size() != n2) {
                rows.pass = false;
                rows.witness = "row " + s[tab.s1].name + "=" + s[tab.s1].elems[u] + " has " +
                               std::to_string(by_row[u].size()) + " entries, expected " +
                               std::to_string(n2);
            }
        }
        rep.pass = rep.pass && rows.pass;
        rep.conditions.push_back(std::move(rows));

        TableCondition proj{table_name(t), "projections_surjective", true, ""};
        std::array<std::vector<char>, 3> hit = {std::vector<char>(n1, 0),
                                                std::vector<char>(n2, 0),
                                                std::vector<char>(n3, 0)};
        for (const auto& tr : tab.triples)
            for (int c = 0; c < 3; ++c) hit[c][static_cast<size_t>(tr[c])] = 1;
        for (int c = 0; c < 3 && proj.pass; ++c) {
            auto miss = std::find(hit[c].begin(), hit[c].end(), 0);
            if (miss != hit[c].end()) {
                int sort_idx = c == 0 ? tab.s1 : (c == 1 ? tab.s2 : tab.s3);
                proj.pass = false;
                proj.witness = "coordinate " + std::to_string(c + 1) + " misses " +
                               s[sort_idx].name + "=" +
                               s[sort_idx].elems[static_cast<size_t>(miss - hit[c].begin())];
            }
        }
        rep.pass = rep.pass && proj.pass;
        rep.conditions.push_back(std::move(proj));

        // Realised (arg2, value) pairs; complete iff the family can move
        // any point to any point.
        std::vector<char> pairs(n2 * n3, 0);
        for (const auto& tr : tab.triples) pairs[static_cast<size_t>(tr[1]) * n3 + tr[2]] = 1;
        bool complete = std::find(pairs.begin(), pairs.end(), 0) == pairs.end();
        rep.pair_complete.emplace_back(table_name(t), complete);
    }
    return rep;
}

namespace {

EquationReport sweep_equation(const FunctionalInstance& inst, bool abelian) {
    DenseFn F = inst.function(TableKind::F);
    DenseFn L = inst.function(TableKind::L);
    DenseFn H = inst.function(TableKind::H);
    DenseFn K = inst.function(TableKind::K);
    DenseFn R, S;
    if (abelian) {
        R = inst.function(TableKind::R);
        S = inst.function(TableKind::S);
    }
    const Sort& sa2 = inst.sort_of(Role::a2);
    const Sort& sa1 = inst.sort_of(Role::a1);
    const Sort& sx2 = inst.sort_of(Role::x2);
    const Sort& sx1 = inst.sort_of(Role::x1);
    const size_t n2 = sa2.size(), n1 = sa1.size(), nx = sx2.size();

    EquationReport rep;
    rep.checked = static_cast<long long>(n2) * n1 * nx;
    auto fails = [&](size_t flat) {
        int x2 = static_cast<int>(flat % nx);
        int a1 = static_cast<int>((flat / nx) % n1);
        int a2 = static_cast<int>(flat / (nx * n1));
        int lhs = H(F(a2, a1), x2);
        int rhs = K(a2, L(a1, x2));
        if (lhs != rhs) return true;
        if (abelian && R(a1, S(a2, x2)) != lhs) return true;
        return false;
    };
    auto bad = detail::first_failure(static_cast<size_t>(rep.checked), fails);
    if (bad) {
        rep.holds = false;
        size_t flat = *bad;
        int x2 = static_cast<int>(flat % nx);
        int a1 = static_cast<int>((flat / nx) % n1);
        int a2 = static_cast<int>(flat / (nx * n1));
        EquationWitness w;
        w.point = {sa2.elems[a2], sa1.elems[a1], sx2.elems[x2]};
        w.values.push_back(sx1.elems[static_cast<size_t>(H(F(a2, a1), x2))]);
        if (abelian) w.values.push_back(sx1.elems[static_cast<size_t>(R(a1, S(a2, x2)))]);
        w.values.push_back(sx1.elems[static_cast<size_t>(K(a2, L(a1, x2)))]);
        rep.witness = std::move(w);
    }
    return rep;
}

} // namespace

EquationReport check_master_equation(const FunctionalInstance& inst) {
    return sweep_equation(inst, false);
}

EquationReport check_abelian_equation(const FunctionalInstance& inst) {
    if (!inst.has_abelian_tables())
        throw MissingTable("abelian equation needs the R and S tables");
    return sweep_equation(inst, true);
}

namespace {

FunctionFamily family_of(const FunctionalInstance& inst, TableKind t) {
    const RelTable& tab = inst.table(t);
    DenseFn fn = inst.function(t);
    const auto& s = inst.sorts();
    FunctionFamily fam;
    fam.name = table_name(t);
    fam.dom = s[tab.s2].name;
    fam.cod = s[tab.s3].name;
    for (size_t u = 0; u < s[tab.s1].size(); ++u) {
        Bijection b;
        b.dom = fam.dom;
        b.cod = fam.cod;
        b.map.resize(s[tab.s2].size());
        for (size_t v = 0; v < s[tab.s2].size(); ++v)
            b.map[v] = fn(static_cast<int>(u), static_cast<int>(v));
        fam.params.push_back(s[tab.s1].elems[u]);
        fam.fns.push_back(std::move(b));
    }
    return fam;
}

} // namespace

Families extract_families(const FunctionalInstance& inst) {
    Families out{family_of(inst, TableKind::L), family_of(inst, TableKind::K),
                 family_of(inst, TableKind::H), std::nullopt, std::nullopt};
    if (inst.has_table(TableKind::R)) out.R = family_of(inst, TableKind::R);
    if (inst.has_table(TableKind::S)) out.S = family_of(inst, TableKind::S);
    return out;
}

} // namespace gcfg
