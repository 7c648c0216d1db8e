#include <doctest.h>

#include <map>
#include <set>

#include "gcfg/gpgen.hpp"
#include "gcfg/groupiso.hpp"
#include "gcfg/reconstruct.hpp"
#include "oracles.hpp"

using namespace gcfg;

namespace {

FunctionalInstance regular_instance(const std::string& spec) {
    FiniteGroupTable g = builtin_group(spec);
    return gen_configuration(g, builtin_action(g, "regular"));
}

FunctionalInstance singleton_instance() {
    std::vector<Sort> sorts = {Sort("G", {"e"}), Sort("X", {"p"})};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, -1};
    FunctionalInstance inst(sorts, roles);
    for (TableKind t : {TableKind::F, TableKind::L, TableKind::H, TableKind::K})
        inst.set_table(t, {{0, 0, 0}});
    return inst;
}

} // namespace

TEST_SUITE("reconstruct") {

TEST_CASE("closure holds on z5 with 25 pairs per clause") {
    Families fams = extract_families(oracles::modular_instance(5));
    ClosureReport rep = closure_check(fams);
    CHECK(rep.pass);
    for (const auto& c : rep.clauses) CHECK(c.checked == 25);
}

TEST_CASE("closure holds on the singleton") {
    CHECK(closure_check(extract_families(singleton_instance())).pass);
}

TEST_CASE("a corrupted h-row fails clause (i) with a witness") {
    FunctionalInstance inst = oracles::modular_instance(5);
    // replace H(0,.) by a non-translation bijection: swap values 0 and 1
    std::vector<std::array<int, 3>> h;
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
            int w = (u + v) % 5;
            if (u == 0) w = w == 0 ? 1 : (w == 1 ? 0 : w);
            h.push_back({u, v, w});
        }
    inst.set_table(TableKind::H, h);
    REQUIRE(validate_tables(inst).pass);  // rows are still bijections
    Families fams = extract_families(inst);
    ClosureReport rep = closure_check(fams);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.clauses[0].pass);
    CHECK(rep.clauses[0].witness == "(0,0)");  // identity composite is gone
}

TEST_CASE("sort mismatch is rejected") {
    Families fams = extract_families(oracles::modular_instance(5));
    Families broken = fams;
    broken.K.dom = "Y";
    CHECK_THROWS_AS(closure_check(broken), SortMismatch);
}

TEST_CASE("presentation property: exhaustive triple counts") {
    PresentationReport z5 = presentation_property(extract_families(oracles::modular_instance(5)).L);
    CHECK(z5.holds);
    CHECK(z5.triples == 125);

    PresentationReport s3 = presentation_property(extract_families(regular_instance("symmetric:3")).L);
    CHECK(s3.holds);
    CHECK(s3.triples == 216);

    PresentationReport one = presentation_property(extract_families(singleton_instance()).L);
    CHECK(one.holds);
}

TEST_CASE("presentation implies closure under composition and inverse") {
    // checked directly on the set {l1^-1 l2}, independent of the table builder
    for (const char* spec : {"cyclic:6", "symmetric:3", "dihedral:4"}) {
        Families fams = extract_families(regular_instance(spec));
        REQUIRE(presentation_property(fams.L).holds);
        std::set<std::vector<int>> set;
        for (const auto& l1 : fams.L.fns)
            for (const auto& l2 : fams.L.fns) set.insert(compose(inverse(l1), l2).map);
        for (const auto& f : set) {
            Bijection bf{"X", "X", f};
            CHECK(set.count(inverse(bf).map));
            for (const auto& g : set) {
                Bijection bg{"X", "X", g};
                CHECK(set.count(compose(bf, bg).map));
            }
        }
    }
}

TEST_CASE("z5 reconstructs to a cyclic group of order 5 acting simply transitively") {
    Reconstruction rec = build_group(oracles::modular_instance(5));
    CHECK(rec.group.order() == 5);
    CHECK(check_transitivity(rec.action));
    CHECK(rec.group.order() == rec.action.set_elems.size());
    CHECK(validate_table(rec.group).ok);
    CHECK(action_axioms_ok(rec.group, rec.action));
    auto witness = iso_check(rec.group, builtin_group("cyclic:5"));
    CHECK(witness.has_value());
}

TEST_CASE("singleton reconstructs to the trivial group") {
    Reconstruction rec = build_group(singleton_instance());
    CHECK(rec.group.order() == 1);
    CHECK(check_transitivity(rec.action));
}

TEST_CASE("z4 through the z2 quotient reconstructs to order 2") {
    FiniteGroupTable z4 = builtin_group("cyclic:4");
    FunctionalInstance inst = gen_configuration(z4, builtin_action(z4, "quotient:2"));
    Reconstruction rec = build_group(inst);
    CHECK(rec.group.order() == 2);
    CHECK(check_transitivity(rec.action));
    FaithfulnessReport faith = faithfulness_report(inst);
    CHECK_FALSE(faith.faithful);
    CHECK(faith.kernel_size == 2);
    auto witness = iso_check(rec.group, builtin_group("cyclic:2"));
    CHECK(witness.has_value());
}

TEST_CASE("ab_claim sweeps all parameter triples") {
    AbClaimReport z5 = ab_claim(extract_families(oracles::modular_instance(5, true)).H);
    CHECK(z5.holds);
    CHECK(z5.triples == 125);

    AbClaimReport s3 = ab_claim(extract_families(regular_instance("symmetric:3")).H);
    CHECK_FALSE(s3.holds);
    CHECK_FALSE(s3.witness.empty());

    AbClaimReport one = ab_claim(extract_families(singleton_instance()).H);
    CHECK(one.holds);
}

TEST_CASE("ab_claim implies a commutative reconstruction") {
    for (const char* spec : {"cyclic:6", "cyclic:2xcyclic:2", "symmetric:3", "quaternion8"}) {
        FunctionalInstance inst = regular_instance(spec);
        AbClaimReport claim = ab_claim(extract_families(inst).H);
        bool abelian = check_abelian(build_group(inst).group);
        CHECK(claim.holds == abelian);
        if (claim.holds) CHECK(abelian);
    }
}

TEST_CASE("check_abelian") {
    CHECK(check_abelian(build_group(regular_instance("cyclic:6")).group));
    CHECK_FALSE(check_abelian(build_group(regular_instance("symmetric:3")).group));
    CHECK(check_abelian(build_group(singleton_instance()).group));
}

TEST_CASE("faithfulness reports") {
    FaithfulnessReport z5 = faithfulness_report(oracles::modular_instance(5));
    CHECK(z5.faithful);
    CHECK(z5.kernel_size == 1);

    FaithfulnessReport one = faithfulness_report(singleton_instance());
    CHECK(one.faithful);
}

TEST_CASE("emit at the identity anchors makes g1 and g2 the identity") {
    FunctionalInstance inst = oracles::modular_instance(5);
    EmittedConfig emitted = emit_g_configuration(inst, "0", "0");
    CHECK(emitted.g1 == "0");
    CHECK(emitted.g2 == "0");
    CHECK(emitted.g3 == "0");
    CHECK(emitted.g3_y2_is_y1);
    CHECK(emitted.g1_y2_is_y3);
}

TEST_CASE("emit at generic anchors revalidates and reconstructs the same group") {
    FunctionalInstance inst = oracles::modular_instance(5);
    EmittedConfig emitted = emit_g_configuration(inst, "2", "3");
    CHECK(emitted.g3_y2_is_y1);
    CHECK(emitted.g1_y2_is_y3);
    CHECK(validate_tables(emitted.instance).pass);
    CHECK(check_master_equation(emitted.instance).holds);
    auto witness = iso_check(build_group(emitted.instance).group, builtin_group("cyclic:5"));
    CHECK(witness.has_value());
}

TEST_CASE("emit on the singleton is trivial") {
    FunctionalInstance one = singleton_instance();
    one.set_designated(Role::a1, "e");
    one.set_designated(Role::a2, "e");
    one.set_designated(Role::a3, "e");
    one.set_designated(Role::x1, "p");
    one.set_designated(Role::x2, "p");
    one.set_designated(Role::x3, "p");
    EmittedConfig emitted = emit_g_configuration(one, "e", "e");
    CHECK(emitted.instance.sort_of(Role::a1).size() == 1);
}

TEST_CASE("anchors must come from the right sorts") {
    FunctionalInstance inst = oracles::modular_instance(5);
    CHECK_THROWS_AS(build_group(inst, "7"), AnchorOutOfSort);
    CHECK_THROWS_AS(emit_g_configuration(inst, "0", "9"), AnchorOutOfSort);
}

TEST_CASE("the reconstruction is anchor-independent up to isomorphism") {
    for (const char* spec : {"cyclic:6", "symmetric:3", "dihedral:4", "quaternion8"}) {
        FunctionalInstance inst = regular_instance(spec);
        Reconstruction base = build_group(inst);
        REQUIRE(inst.sort_of(Role::a1).size() <= 8);
        for (const auto& anchor : inst.sort_of(Role::a1).elems) {
            Reconstruction other = build_group(inst, anchor);
            CHECK(iso_check(base.group, other.group).has_value());
        }
    }
}

TEST_CASE("round trip through the generator recovers each builtin group") {
    for (const char* spec : {"cyclic:2", "cyclic:7", "cyclic:2xcyclic:4", "dihedral:5",
                             "symmetric:4", "quaternion8"}) {
        FiniteGroupTable g = builtin_group(spec);
        Reconstruction rec = build_group(gen_configuration(g, builtin_action(g, "regular")));
        CHECK(iso_check(rec.group, g).has_value());
        CHECK(action_axioms_ok(rec.group, rec.action));
    }
}

TEST_CASE("a germ family violating the presentation escapes closure") {
    // L rows: identity and a 3-cycle; products of the induced germs leave
    // the enumerated set, which the builder must refuse.
    std::vector<Sort> sorts = {Sort("G", {"0", "1"}), Sort("X", {"0", "1", "2"})};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, -1};
    FunctionalInstance inst(sorts, roles);
    inst.set_table(TableKind::F, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    std::vector<std::array<int, 3>> rows = {
        {0, 0, 0}, {0, 1, 1}, {0, 2, 2},  // identity
        {1, 0, 1}, {1, 1, 2}, {1, 2, 0},  // 3-cycle
    };
    inst.set_table(TableKind::L, rows);
    inst.set_table(TableKind::H, rows);
    inst.set_table(TableKind::K, rows);
    REQUIRE(validate_tables(inst).pass);
    CHECK_FALSE(presentation_property(extract_families(inst).L).holds);
    CHECK_THROWS_AS(build_group(inst, "0"), ClosureEscape);
}

}
