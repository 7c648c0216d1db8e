#include "gcfg/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gcfg/gpgen.hpp"
#include "gcfg/json_io.hpp"

namespace gcfg::cli {

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

int emit(std::ostream& out, json rep, bool pass) {
    rep["pass"] = pass;
    out << rep.dump(2) << "\n";
    return pass ? kPass : kCheckFailed;
}

int cmd_validate(const std::string& path, std::ostream& out) {
    InstanceFile file = load_instance(path);
    json rep{{"command", "validate"}, {"file", path}};
    bool pass = true;
    if (const auto* cfg = std::get_if<ConfigPoints>(&file)) {
        rep["instance_type"] = "matroid_config";
        ClauseReport mk = validate_mk(*cfg);
        rep["clauses"] = to_json(mk);
        pass = mk.pass;
        if (cfg->has_x4()) {
            ClauseReport ab = validate_abelian_node(*cfg);
            rep["abelian_node"] = to_json(ab);
            pass = pass && ab.pass;
        }
    } else if (const auto* inst = std::get_if<FunctionalInstance>(&file)) {
        rep["instance_type"] = "functional_instance";
        ValidityReport val = validate_tables(*inst);
        rep["tables"] = to_json(val);
        pass = val.pass;
        if (val.pass) {
            EquationReport master = check_master_equation(*inst);
            rep["master_equation"] = to_json(master);
            pass = master.holds;
            if (inst->has_abelian_tables()) {
                EquationReport ab = check_abelian_equation(*inst);
                rep["abelian_equation"] = to_json(ab);
                pass = pass && ab.holds;
            }
        }
    } else if (const auto* q = std::get_if<QuadRelation>(&file)) {
        rep["instance_type"] = "quadrangle";
        AxiomReport ax = validate_quadrangle(*q);
        rep["axioms"] = to_json(ax);
        pass = ax.pass;
    } else {
        const auto& g = std::get<FiniteGroupTable>(file);
        rep["instance_type"] = "group";
        TableReport tr = validate_table(g);
        rep["table"] = json{{"pass", tr.ok}};
        if (!tr.ok) rep["table"]["witness"] = tr.witness;
        pass = tr.ok;
    }
    return emit(out, std::move(rep), pass);
}

struct ReconstructFlags {
    std::string anchor_a, anchor_b;
    bool abelian_check = false;
    std::string emit_group, emit_config;
};

int cmd_reconstruct(const std::string& path, const ReconstructFlags& flags, std::ostream& out) {
    InstanceFile file = load_instance(path);
    auto* inst = std::get_if<FunctionalInstance>(&file);
    if (!inst) throw SchemaError("reconstruct needs a functional_instance file");

    json rep{{"command", "reconstruct"}, {"file", path}};
    bool pass = true;

    ValidityReport val = validate_tables(*inst);
    rep["tables"] = to_json(val);
    if (!val.pass) return emit(out, std::move(rep), false);

    EquationReport master = check_master_equation(*inst);
    rep["master_equation"] = to_json(master);
    if (!master.holds) return emit(out, std::move(rep), false);

    Families fams = extract_families(*inst);
    ClosureReport closure = closure_check(fams);
    rep["closure"] = to_json(closure);
    pass = pass && closure.pass;

    PresentationReport pres = presentation_property(fams.L);
    rep["presentation"] = to_json(pres);
    pass = pass && pres.holds;
    if (!pass) return emit(out, std::move(rep), false);

    std::string anchor_a = flags.anchor_a;
    if (anchor_a.empty()) {
        int d = inst->designated(Role::a1);
        anchor_a = inst->sort_of(Role::a1).elems[static_cast<size_t>(d >= 0 ? d : 0)];
    }
    Reconstruction rec = build_group(*inst, anchor_a);
    rep["group"] = json{{"order", rec.group.order()},
                        {"anchor", rec.anchor},
                        {"abelian", check_abelian(rec.group)},
                        {"elements", rec.group.elements}};
    rep["transitive"] = check_transitivity(rec.action);
    pass = pass && rec.action.transitive;

    FaithfulnessReport faith = faithfulness_report(*inst);
    rep["faithfulness"] = to_json(faith);

    if (flags.abelian_check) {
        AbClaimReport ab = ab_claim(fams.H);
        rep["ab_claim"] = to_json(ab);
        pass = pass && ab.holds;
        if (inst->has_abelian_tables()) {
            EquationReport abeq = check_abelian_equation(*inst);
            rep["abelian_equation"] = to_json(abeq);
            pass = pass && abeq.holds;
        }
    }

    if (!flags.emit_group.empty()) {
        save_json(to_json(rec.group), flags.emit_group);
        rep["group_file"] = flags.emit_group;
    }
    if (!flags.emit_config.empty()) {
        std::string anchor_b = flags.anchor_b;
        if (anchor_b.empty()) {
            int d = inst->designated(Role::a3);
            anchor_b = inst->sort_of(Role::a3).elems[static_cast<size_t>(d >= 0 ? d : 0)];
        }
        EmittedConfig emitted = emit_g_configuration(*inst, anchor_a, anchor_b);
        save_json(to_json(emitted.instance), flags.emit_config);
        rep["config_file"] = flags.emit_config;
        rep["emitted"] = json{{"g1", emitted.g1}, {"g2", emitted.g2}, {"g3", emitted.g3},
                              {"y1", emitted.y1}, {"y2", emitted.y2}, {"y3", emitted.y3},
                              {"g3_y2_is_y1", emitted.g3_y2_is_y1},
                              {"g1_y2_is_y3", emitted.g1_y2_is_y3}};
        pass = pass && emitted.g3_y2_is_y1 && emitted.g1_y2_is_y3;
    }
    return emit(out, std::move(rep), pass);
}

struct GenerateFlags {
    std::string group, action = "regular", output;
    bool abelian = false;
    std::vector<int> matroid;  // {p, m}
};

int cmd_generate(const GenerateFlags& flags, std::ostream& out) {
    json doc;
    if (!flags.matroid.empty()) {
        if (flags.matroid.size() != 2) throw UnknownSpec("--matroid takes p and m");
        doc = to_json(gen_matroid_instance(flags.matroid[0], flags.matroid[1]));
    } else if (!flags.group.empty()) {
        FiniteGroupTable g = builtin_group(flags.group);
        GroupAction a = builtin_action(g, flags.action);
        FunctionalInstance inst =
            flags.abelian ? gen_abelian_extension(g, a) : gen_configuration(g, a);
        doc = to_json(inst);
    } else {
        throw UnknownSpec("generate needs --group or --matroid");
    }
    if (!flags.output.empty()) {
        save_json(doc, flags.output);
        out << json{{"command", "generate"}, {"pass", true}, {"file", flags.output}}.dump(2)
            << "\n";
    } else {
        out << doc.dump(2) << "\n";
    }
    return kPass;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& output,
                std::ostream& out) {
    InstanceFile file = load_instance(path);
    json doc;
    if (to == "quadrangle") {
        auto* inst = std::get_if<FunctionalInstance>(&file);
        if (!inst) throw SchemaError("converting to a quadrangle needs a functional_instance");
        doc = to_json(config_to_quad(*inst));
    } else if (to == "configuration") {
        auto* q = std::get_if<QuadRelation>(&file);
        if (!q) throw SchemaError("converting to a configuration needs a quadrangle");
        doc = to_json(quad_to_config(*q));
    } else {
        throw UnknownSpec("--to must be 'quadrangle' or 'configuration'");
    }
    if (!output.empty()) {
        save_json(doc, output);
        out << json{{"command", "convert"}, {"pass", true}, {"file", output}}.dump(2) << "\n";
    } else {
        out << doc.dump(2) << "\n";
    }
    return kPass;
}

int cmd_glue(const std::string& a_text, long long grid, std::ostream& out) {
    auto a = Rational::parse(a_text);
    if (!a) throw InvalidParams("--a must be a rational like 1/4");
    const Rational& a_j = *a;
    GlueGroupReport group = verify_group(a_j, grid);
    EmbedReport embed = verify_embedding(a_j, grid);
    json rep{{"command", "glue"}, {"a", a_j.str()}, {"grid", grid},
             {"group", to_json(group)}, {"embedding", to_json(embed)}};
    return emit(out, std::move(rep), group.pass && embed.pass);
}

int cmd_iso(const std::string& path1, const std::string& path2, std::ostream& out) {
    auto load_group = [](const std::string& p) {
        InstanceFile f = load_instance(p);
        auto* g = std::get_if<FiniteGroupTable>(&f);
        if (!g) throw SchemaError("iso needs 'group' files");
        TableReport tr = validate_table(*g);
        if (!tr.ok) throw InvalidTable("group file '" + p + "': " + tr.witness);
        return *g;
    };
    FiniteGroupTable g1 = load_group(path1);
    FiniteGroupTable g2 = load_group(path2);
    auto witness = iso_check(g1, g2);
    json rep{{"command", "iso"}, {"isomorphic", witness.has_value()}};
    if (witness) {
        json map = json::object();
        for (size_t i = 0; i < g1.order(); ++i)
            map[g1.elements[i]] = g2.elements[static_cast<size_t>(witness->map[i])];
        rep["witness"] = std::move(map);
    }
    return emit(out, std::move(rep), witness.has_value());
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite group-configuration toolkit", "gcfg"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "validate an instance file");
    std::string v_file;
    validate->add_option("file", v_file, "instance JSON file")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild the group of an instance");
    std::string r_file;
    ReconstructFlags r_flags;
    reconstruct->add_option("file", r_file, "functional_instance JSON file")->required();
    reconstruct->add_option("--anchor-a", r_flags.anchor_a, "anchor in the a1 sort");
    reconstruct->add_option("--anchor-b", r_flags.anchor_b, "anchor in the a3 sort");
    reconstruct->add_flag("--abelian-check", r_flags.abelian_check,
                          "also run the h-family commutation sweep");
    reconstruct->add_option("--emit-group", r_flags.emit_group, "write the group JSON here");
    reconstruct->add_option("--emit-config", r_flags.emit_config,
                            "write the re-emitted configuration here");

    auto* generate = app.add_subcommand("generate", "generate a ground-truth instance");
    GenerateFlags g_flags;
    generate->add_option("--group", g_flags.group, "group spec, e.g. cyclic:5 or cyclic:2xcyclic:4");
    generate->add_option("--action", g_flags.action, "regular | natural | quotient:ELEMS");
    generate->add_flag("--abelian", g_flags.abelian, "emit the abelian extension (R, S, x4)");
    generate->add_option("--matroid", g_flags.matroid, "emit a matroid_config for p m")
        ->expected(2);
    generate->add_option("-o,--output", g_flags.output, "output file (stdout otherwise)");

    auto* convert = app.add_subcommand("convert", "configuration <-> quadrangle");
    std::string c_file, c_to, c_out;
    convert->add_option("file", c_file, "instance JSON file")->required();
    convert->add_option("--to", c_to, "quadrangle | configuration")->required();
    convert->add_option("-o,--output", c_out, "output file (stdout otherwise)");

    auto* glue = app.add_subcommand("glue", "wrap-around group on [-a, a)");
    std::string gl_a;
    long long gl_grid = 0;
    glue->add_option("--a", gl_a, "half-width as a rational, e.g. 1/4")->required();
    glue->add_option("--grid", gl_grid, "grid denominator")->required();

    auto* iso = app.add_subcommand("iso", "isomorphism test for two group files");
    std::string i_file1, i_file2;
    iso->add_option("first", i_file1, "group JSON file")->required();
    iso->add_option("second", i_file2, "group JSON file")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kPass;
        }
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (validate->parsed()) return cmd_validate(v_file, out);
        if (reconstruct->parsed()) return cmd_reconstruct(r_file, r_flags, out);
        if (generate->parsed()) return cmd_generate(g_flags, out);
        if (convert->parsed()) return cmd_convert(c_file, c_to, c_out, out);
        if (glue->parsed()) return cmd_glue(gl_a, gl_grid, out);
        if (iso->parsed()) return cmd_iso(i_file1, i_file2, out);
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kBadInput;
    } catch (const UnknownSpec& e) {
        err << "unknown spec: " << e.what() << "\n";
        return kBadInput;
    } catch (const InvalidParams& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kBadInput;
    } catch (const NonPositive& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kBadInput;
    } catch (const InvalidTable& e) {
        err << "invalid table: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        err << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    err << "no subcommand\n";
    return kBadInput;
}

} // namespace gcfg::cli
