#include <doctest.h>

#include <random>

#include "gcfg/finstance.hpp"
#include "gcfg/gpgen.hpp"
#include "oracles.hpp"

using namespace gcfg;

namespace {

FunctionalInstance singleton_instance() {
    std::vector<Sort> sorts = {Sort("G", {"e"}), Sort("X", {"p"})};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, -1};
    FunctionalInstance inst(sorts, roles);
    inst.set_table(TableKind::F, {{0, 0, 0}});
    inst.set_table(TableKind::L, {{0, 0, 0}});
    inst.set_table(TableKind::H, {{0, 0, 0}});
    inst.set_table(TableKind::K, {{0, 0, 0}});
    return inst;
}

// S3 regular with R,S wired in like the abelian generator would; the
// abelian equation must then fail.
FunctionalInstance s3_with_rs() {
    FiniteGroupTable g = builtin_group("symmetric:3");
    std::vector<Sort> sorts = {Sort("G", g.elements), Sort("X", g.elements)};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, 1};
    FunctionalInstance inst(sorts, roles);
    std::vector<std::array<int, 3>> mul;
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) mul.push_back({u, v, g.mul[u][v]});
    for (TableKind t : kAllTables) inst.set_table(t, mul);
    return inst;
}

} // namespace

TEST_SUITE("finstance") {

TEST_CASE("z5 translation tables validate") {
    FunctionalInstance inst = oracles::modular_instance(5);
    ValidityReport rep = validate_tables(inst);
    CHECK(rep.pass);
    for (const auto& [table, complete] : rep.pair_complete) CHECK(complete);
}

TEST_CASE("a doubled L value fails with the two offending triples") {
    FunctionalInstance inst = oracles::modular_instance(5);
    // L(1,.) sends both 0 and 1 to 1
    std::vector<std::array<int, 3>> l;
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) l.push_back({u, v, u == 1 && v == 1 ? 1 : (u + v) % 5});
    inst.set_table(TableKind::L, l);
    ValidityReport rep = validate_tables(inst);
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (const auto& c : rep.conditions)
        if (c.table == "L" && !c.pass) {
            CHECK(c.witness == "row not injective: (1,0,1),(1,1,1)");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("singleton sorts validate") {
    CHECK(validate_tables(singleton_instance()).pass);
}

TEST_CASE("padding x2 with an unreachable element fails validation") {
    std::vector<std::string> g = {"0", "1"}, x = {"0", "1", "z"};
    std::vector<Sort> sorts = {Sort("G", g), Sort("X", x)};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, -1};
    FunctionalInstance inst(sorts, roles);
    std::vector<std::array<int, 3>> mul = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    std::vector<std::array<int, 3>> act = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    inst.set_table(TableKind::F, mul);
    inst.set_table(TableKind::L, act);
    inst.set_table(TableKind::H, act);
    inst.set_table(TableKind::K, act);
    CHECK_FALSE(validate_tables(inst).pass);
}

TEST_CASE("master equation on z5") {
    FunctionalInstance inst = oracles::modular_instance(5);
    // spot value: H(F(2,1),3) = H(3,3) = 1 and K(2,L(1,3)) = K(2,4) = 1
    DenseFn F = inst.function(TableKind::F);
    DenseFn L = inst.function(TableKind::L);
    DenseFn H = inst.function(TableKind::H);
    DenseFn K = inst.function(TableKind::K);
    CHECK(H(F(2, 1), 3) == 1);
    CHECK(K(2, L(1, 3)) == 1);

    EquationReport rep = check_master_equation(inst);
    CHECK(rep.holds);
    CHECK(rep.checked == 125);
}

TEST_CASE("master equation counterexample for a shifted H") {
    FunctionalInstance inst = oracles::modular_instance(5);
    std::vector<std::array<int, 3>> h;
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) h.push_back({u, v, (u + v + 1) % 5});
    inst.set_table(TableKind::H, h);
    EquationReport rep = check_master_equation(inst);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->point == std::array<std::string, 3>{"0", "0", "0"});
}

TEST_CASE("missing table raises MissingTable") {
    std::vector<Sort> sorts = {Sort("G", {"e"}), Sort("X", {"p"})};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, -1};
    FunctionalInstance inst(sorts, roles);
    inst.set_table(TableKind::F, {{0, 0, 0}});
    CHECK_THROWS_AS(check_master_equation(inst), MissingTable);
    CHECK_THROWS_AS(check_abelian_equation(singleton_instance()), MissingTable);
}

TEST_CASE("abelian equation holds on z5 and fails on s3") {
    FunctionalInstance z5 = oracles::modular_instance(5, true);
    EquationReport rep = check_abelian_equation(z5);
    CHECK(rep.holds);
    CHECK(rep.checked == 125);

    FunctionalInstance s3 = s3_with_rs();
    CHECK(validate_tables(s3).pass);
    EquationReport bad = check_abelian_equation(s3);
    CHECK_FALSE(bad.holds);
    CHECK(bad.witness.has_value());
}

TEST_CASE("abelian equation is trivial on singletons") {
    std::vector<Sort> sorts = {Sort("G", {"e"}), Sort("X", {"p"})};
    std::array<int, 7> roles{0, 0, 0, 1, 1, 1, 1};
    FunctionalInstance inst(sorts, roles);
    for (TableKind t : kAllTables) inst.set_table(t, {{0, 0, 0}});
    CHECK(check_abelian_equation(inst).holds);
}

TEST_CASE("extract_families reads the tables off") {
    FunctionalInstance z5 = oracles::modular_instance(5);
    Families fams = extract_families(z5);
    CHECK(fams.L.size() == 5);
    CHECK(fams.K.size() == 5);
    CHECK(fams.H.size() == 5);
    CHECK_FALSE(fams.R.has_value());
    // l_1 is the +1 translation
    CHECK(fams.L.params[1] == "1");
    CHECK(fams.L.fns[1].apply(0) == 1);

    Families one = extract_families(singleton_instance());
    CHECK(one.L.size() == 1);
    CHECK(one.L.fns[0].map == std::vector<int>{0});
}

TEST_CASE("quotient action gives 4 parameters but 2 distinct functions") {
    FiniteGroupTable z4 = builtin_group("cyclic:4");
    GroupAction proj = builtin_action(z4, "quotient:2");
    FunctionalInstance inst = gen_configuration(z4, proj);
    Families fams = extract_families(inst);
    CHECK(fams.L.size() == 4);
    CHECK(germ_classes(fams.L).size() == 2);
}

TEST_CASE("family counts match the parameter sorts") {
    for (const char* spec : {"cyclic:6", "symmetric:3", "dihedral:4"}) {
        FiniteGroupTable g = builtin_group(spec);
        FunctionalInstance inst = gen_configuration(g, builtin_action(g, "regular"));
        Families fams = extract_families(inst);
        CHECK(fams.L.size() == inst.sort_of(Role::a1).size());
        CHECK(fams.K.size() == inst.sort_of(Role::a2).size());
        CHECK(fams.H.size() == inst.sort_of(Role::a3).size());
    }
}

TEST_CASE("master equation is invariant under sort relabeling") {
    std::mt19937 rng(20250801);
    FiniteGroupTable s3 = builtin_group("symmetric:3");
    FunctionalInstance inst = gen_configuration(s3, builtin_action(s3, "regular"));
    REQUIRE(check_master_equation(inst).holds);

    for (int trial = 0; trial < 5; ++trial) {
        // permute the element lists of both sorts and rewrite the tables
        std::vector<Sort> old_sorts = inst.sorts();
        std::vector<std::vector<int>> perm(old_sorts.size());
        std::vector<Sort> new_sorts;
        for (size_t s = 0; s < old_sorts.size(); ++s) {
            perm[s].resize(old_sorts[s].size());
            for (size_t i = 0; i < perm[s].size(); ++i) perm[s][i] = static_cast<int>(i);
            std::shuffle(perm[s].begin(), perm[s].end(), rng);
            std::vector<std::string> elems(old_sorts[s].size());
            for (size_t i = 0; i < elems.size(); ++i)
                elems[static_cast<size_t>(perm[s][i])] = old_sorts[s].elems[i];
            new_sorts.push_back(Sort(old_sorts[s].name, elems));
        }
        std::array<int, 7> roles{};
        for (Role r : kAllRoles)
            roles[static_cast<int>(r)] = r == Role::x4 ? -1 : inst.sort_index_of(r);
        FunctionalInstance relabeled(new_sorts, roles);
        for (TableKind t : {TableKind::F, TableKind::L, TableKind::H, TableKind::K}) {
            const RelTable& tab = inst.table(t);
            std::vector<std::array<int, 3>> triples;
            for (const auto& tr : tab.triples)
                triples.push_back({perm[tab.s1][tr[0]], perm[tab.s2][tr[1]],
                                   perm[tab.s3][tr[2]]});
            relabeled.set_table(t, triples);
        }
        CHECK(validate_tables(relabeled).pass);
        CHECK(check_master_equation(relabeled).holds);
    }
}

}
