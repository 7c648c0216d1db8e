#include "gcfg/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace gcfg {

namespace {

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_field(const json& doc, const char* name) {
    const json& f = field(doc, name);
    if (!f.is_string()) throw SchemaError(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

int int_field(const json& doc, const char* name) {
    const json& f = field(doc, name);
    if (!f.is_number_integer()) throw SchemaError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

std::string id_of(const json& v, const char* what) {
    if (!v.is_string()) throw SchemaError(std::string(what) + " ids must be strings");
    return v.get<std::string>();
}

} // namespace

ConfigPoints matroid_config_from_json(const json& doc) {
    try {
        LinearMatroid mat(int_field(doc, "p"), int_field(doc, "ambient"));
        const json& points = field(doc, "points");
        if (!points.is_object()) throw SchemaError("'points' must be an object");
        for (auto it = points.begin(); it != points.end(); ++it) {
            std::vector<FpVector> vecs;
            for (const json& vec : it.value()) {
                FpVector v;
                for (const json& e : vec) {
                    if (!e.is_number_integer()) throw SchemaError("vector entries must be integers");
                    v.push_back(e.get<int>());
                }
                vecs.push_back(std::move(v));
            }
            mat.add_point(it.key(), std::move(vecs));
        }
        const json& roles = field(doc, "roles");
        std::array<std::string, 7> labels{};
        for (Role r : kAllRoles) {
            auto it = roles.find(role_name(r));
            if (it == roles.end()) {
                if (r == Role::x4) continue;
                throw SchemaError(std::string("role '") + role_name(r) + "' is unbound");
            }
            labels[static_cast<int>(r)] = id_of(*it, "role");
        }
        std::vector<std::string> base;
        for (const json& b : field(doc, "base")) base.push_back(id_of(b, "base"));
        ConfigPoints cfg{std::move(mat), std::move(labels), std::move(base),
                         int_field(doc, "m"), int_field(doc, "k")};
        cfg.check_well_formed();
        return cfg;
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const ConfigPoints& cfg) {
    json points = json::object();
    for (const auto& [label, vecs] : cfg.matroid.points()) {
        json tuple = json::array();
        for (const auto& v : vecs) tuple.push_back(v);
        points[label] = std::move(tuple);
    }
    json roles = json::object();
    for (Role r : kAllRoles) {
        if (r == Role::x4 && !cfg.has_x4()) continue;
        roles[role_name(r)] = cfg.label(r);
    }
    return json{{"type", "matroid_config"}, {"p", cfg.matroid.p()},
                {"ambient", cfg.matroid.ambient()}, {"points", std::move(points)},
                {"roles", std::move(roles)}, {"base", cfg.base},
                {"m", cfg.m}, {"k", cfg.k}};
}

FunctionalInstance functional_instance_from_json(const json& doc) {
    const json& sorts_j = field(doc, "sorts");
    if (!sorts_j.is_object()) throw SchemaError("'sorts' must be an object");
    std::vector<Sort> sorts;
    std::map<std::string, int> sort_idx;
    for (auto it = sorts_j.begin(); it != sorts_j.end(); ++it) {
        std::vector<std::string> elems;
        for (const json& e : it.value()) elems.push_back(id_of(e, "sort element"));
        sort_idx.emplace(it.key(), static_cast<int>(sorts.size()));
        sorts.push_back(Sort(it.key(), std::move(elems)));
    }
    const json& roles_j = field(doc, "roles");
    std::array<int, 7> roles;
    roles.fill(-1);
    for (Role r : kAllRoles) {
        auto it = roles_j.find(role_name(r));
        if (it == roles_j.end()) {
            if (r == Role::x4) continue;
            throw SchemaError(std::string("role '") + role_name(r) + "' has no sort");
        }
        auto si = sort_idx.find(id_of(*it, "role sort"));
        if (si == sort_idx.end())
            throw SchemaError(std::string("role '") + role_name(r) +
                              "' names an unknown sort");
        roles[static_cast<int>(r)] = si->second;
    }
    FunctionalInstance inst(std::move(sorts), roles);

    const json& tables = field(doc, "tables");
    for (TableKind t : kAllTables) {
        auto it = tables.find(table_name(t));
        if (it == tables.end()) {
            if (t == TableKind::R || t == TableKind::S) continue;
            throw SchemaError(std::string("table '") + table_name(t) + "' is missing");
        }
        auto sig = inst.table_signature(t);
        if (sig[0] < 0 || sig[1] < 0 || sig[2] < 0)
            throw SchemaError(std::string("table '") + table_name(t) +
                              "' needs the x4 role");
        std::vector<std::array<int, 3>> triples;
        for (const json& row : *it) {
            if (!row.is_array() || row.size() != 3)
                throw SchemaError("table rows must be [arg1, arg2, value]");
            std::array<int, 3> tr{};
            for (int c = 0; c < 3; ++c)
                tr[c] = inst.sorts()[static_cast<size_t>(sig[c])].at(id_of(row[c], "table"));
            triples.push_back(tr);
        }
        inst.set_table(t, std::move(triples));
    }
    if (inst.has_table(TableKind::R) != inst.has_table(TableKind::S))
        throw SchemaError("tables R and S must be present together");
    if (inst.has_table(TableKind::R) && !inst.has_x4())
        throw SchemaError("tables R and S need the x4 role");

    if (auto it = doc.find("designated"); it != doc.end()) {
        for (Role r : kAllRoles) {
            auto d = it->find(role_name(r));
            if (d == it->end()) continue;
            inst.set_designated(r, id_of(*d, "designated"));
        }
    }
    return inst;
}

json to_json(const FunctionalInstance& inst) {
    json sorts = json::object();
    for (const Sort& s : inst.sorts()) sorts[s.name] = s.elems;
    json roles = json::object();
    for (Role r : kAllRoles) {
        if (r == Role::x4 && !inst.has_x4()) continue;
        roles[role_name(r)] = inst.sort_of(r).name;
    }
    json tables = json::object();
    for (TableKind t : kAllTables) {
        if (!inst.has_table(t)) continue;
        const RelTable& tab = inst.table(t);
        const auto& ss = inst.sorts();
        json rows = json::array();
        for (const auto& tr : tab.triples)
            rows.push_back({ss[tab.s1].elems[tr[0]], ss[tab.s2].elems[tr[1]],
                            ss[tab.s3].elems[tr[2]]});
        tables[table_name(t)] = std::move(rows);
    }
    json out{{"type", "functional_instance"}, {"sorts", std::move(sorts)},
             {"roles", std::move(roles)}, {"tables", std::move(tables)}};
    json designated = json::object();
    for (Role r : kAllRoles)
        if (inst.designated(r) >= 0) designated[role_name(r)] = inst.designated_id(r);
    if (!designated.empty()) out["designated"] = std::move(designated);
    return out;
}

QuadRelation quadrangle_from_json(const json& doc) {
    const json& sorts_j = field(doc, "sorts");
    QuadRelation q;
    std::map<std::string, int> sort_idx;
    for (auto it = sorts_j.begin(); it != sorts_j.end(); ++it) {
        std::vector<std::string> elems;
        for (const json& e : it.value()) elems.push_back(id_of(e, "sort element"));
        sort_idx.emplace(it.key(), static_cast<int>(q.sorts.size()));
        q.sorts.push_back(Sort(it.key(), std::move(elems)));
    }
    const json& coords = field(doc, "coords");
    if (!coords.is_array() || coords.size() != 4)
        throw SchemaError("'coords' must list the four coordinate sorts");
    for (int c = 0; c < 4; ++c) {
        auto it = sort_idx.find(id_of(coords[c], "coords"));
        if (it == sort_idx.end()) throw SchemaError("'coords' names an unknown sort");
        q.coord_sort[c] = it->second;
    }
    for (const json& row : field(doc, "tuples")) {
        if (!row.is_array() || row.size() != 4) throw SchemaError("tuples must have four entries");
        std::array<int, 4> t{};
        for (int c = 0; c < 4; ++c) t[c] = q.coord(c).at(id_of(row[c], "tuple"));
        q.tuples.push_back(t);
    }
    std::sort(q.tuples.begin(), q.tuples.end());
    q.tuples.erase(std::unique(q.tuples.begin(), q.tuples.end()), q.tuples.end());
    if (auto it = doc.find("abelian_claimed"); it != doc.end()) {
        if (!it->is_boolean()) throw SchemaError("'abelian_claimed' must be a boolean");
        q.abelian_claimed = it->get<bool>();
    }
    return q;
}

json to_json(const QuadRelation& q) {
    json sorts = json::object();
    for (const Sort& s : q.sorts) sorts[s.name] = s.elems;
    json coords = json::array();
    for (int c = 0; c < 4; ++c) coords.push_back(q.coord(c).name);
    json tuples = json::array();
    for (const auto& t : q.tuples) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(q.coord(c).elems[static_cast<size_t>(t[c])]);
        tuples.push_back(std::move(row));
    }
    return json{{"type", "quadrangle"}, {"sorts", std::move(sorts)},
                {"coords", std::move(coords)}, {"tuples", std::move(tuples)},
                {"abelian_claimed", q.abelian_claimed}};
}

FiniteGroupTable group_from_json(const json& doc) {
    FiniteGroupTable g;
    for (const json& e : field(doc, "elements")) g.elements.push_back(id_of(e, "element"));
    const json& table = field(doc, "table");
    for (const json& row : table) {
        std::vector<int> r;
        for (const json& v : row) {
            if (!v.is_number_integer()) throw SchemaError("table entries must be indices");
            r.push_back(v.get<int>());
        }
        g.mul.push_back(std::move(r));
    }
    g.identity = int_field(doc, "identity");
    const size_t n = g.elements.size();
    if (g.mul.size() != n) throw SchemaError("table must be square over the elements");
    for (const auto& row : g.mul) {
        if (row.size() != n) throw SchemaError("table must be square over the elements");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(n)) throw SchemaError("table index out of range");
    }
    if (g.identity < 0 || g.identity >= static_cast<int>(n))
        throw SchemaError("identity index out of range");
    g.inverse.assign(n, -1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (g.mul[i][j] == g.identity && g.mul[j][i] == g.identity)
                g.inverse[i] = static_cast<int>(j);
    return g;
}

json to_json(const FiniteGroupTable& g) {
    return json{{"type", "group"}, {"elements", g.elements}, {"table", g.mul},
                {"identity", g.identity}};
}

InstanceFile parse_instance(const json& doc) {
    if (!doc.is_object()) throw SchemaError("instance document must be an object");
    std::string type = string_field(doc, "type");
    if (type == "matroid_config") return matroid_config_from_json(doc);
    if (type == "functional_instance") return functional_instance_from_json(doc);
    if (type == "quadrangle") return quadrangle_from_json(doc);
    if (type == "group") return group_from_json(doc);
    throw SchemaError("unknown instance type '" + type + "'");
}

InstanceFile parse_instance_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("not valid JSON");
    return parse_instance(doc);
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_instance_text(text);
}

void save_json(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------- reports

json to_json(const ClauseReport& rep) {
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
        json e{{"id", c.id}, {"pass", c.pass}};
        if (c.expected >= 0) {
            e["expected"] = c.expected;
            e["measured"] = c.measured;
        }
        if (!c.detail.empty()) e["detail"] = c.detail;
        clauses.push_back(std::move(e));
    }
    json out{{"pass", rep.pass}, {"clauses", std::move(clauses)}};
    if (const ClauseCheck* f = rep.first_failure()) out["first_failure"] = f->id;
    return out;
}

json to_json(const ValidityReport& rep) {
    json conds = json::array();
    for (const auto& c : rep.conditions) {
        json e{{"table", c.table}, {"condition", c.condition}, {"pass", c.pass}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        conds.push_back(std::move(e));
    }
    json pairs = json::object();
    for (const auto& [t, complete] : rep.pair_complete) pairs[t] = complete;
    return json{{"pass", rep.pass}, {"conditions", std::move(conds)},
                {"pair_complete", std::move(pairs)}};
}

json to_json(const EquationReport& rep) {
    json out{{"holds", rep.holds}, {"checked", rep.checked}};
    if (rep.witness) {
        out["witness"] = json{{"a2", rep.witness->point[0]}, {"a1", rep.witness->point[1]},
                              {"x2", rep.witness->point[2]}, {"values", rep.witness->values}};
    }
    return out;
}

json to_json(const ClosureReport& rep) {
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
        json e{{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        clauses.push_back(std::move(e));
    }
    return json{{"pass", rep.pass}, {"clauses", std::move(clauses)}};
}

json to_json(const PresentationReport& rep) {
    json out{{"holds", rep.holds}, {"triples", rep.triples}};
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

json to_json(const AbClaimReport& rep) {
    json out{{"holds", rep.holds}, {"triples", rep.triples}};
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

json to_json(const FaithfulnessReport& rep) {
    json out{{"faithful", rep.faithful}, {"parameters", rep.param_count},
             {"classes", rep.class_count}, {"class_sizes", rep.class_sizes}};
    if (rep.kernel_size) out["kernel_size"] = *rep.kernel_size;
    return out;
}

json to_json(const AxiomReport& rep) {
    json fibers = json::array();
    for (const auto& f : rep.fibers) {
        json e{{"pattern", f.pattern}, {"pass", f.pass}};
        if (!f.witness.empty()) e["witness"] = f.witness;
        fibers.push_back(std::move(e));
    }
    json axioms = json::array();
    for (const auto& a : rep.axioms) {
        json e{{"axiom", a.name}, {"pass", a.pass}, {"checked", a.checked}};
        if (!a.witness.empty()) e["witness"] = a.witness;
        axioms.push_back(std::move(e));
    }
    return json{{"pass", rep.pass}, {"fibers_pass", rep.fibers_pass},
                {"fibers", std::move(fibers)}, {"axioms", std::move(axioms)}};
}

json to_json(const GlueGroupReport& rep) {
    json out{{"pass", rep.pass},
             {"grid_size", rep.grid.size()},
             {"grid_closed", rep.grid_closed},
             {"associativity", rep.associativity},
             {"associativity_checked", rep.assoc_checked},
             {"identity", rep.identity_ok},
             {"inverses", rep.inverses_ok},
             {"commutative", rep.commutative},
             {"range_ok", rep.range_ok}};
    if (!rep.assoc_witness.empty()) out["associativity_witness"] = rep.assoc_witness;
    if (rep.table) out["table"] = to_json(*rep.table);
    return out;
}

json to_json(const EmbedReport& rep) {
    json out{{"pass", rep.pass}, {"pairs_checked", rep.pairs_checked}};
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

} // namespace gcfg
