#include <doctest.h>

#include "gcfg/configuration.hpp"
#include "gcfg/gpgen.hpp"

using namespace gcfg;

namespace {

ConfigPoints translation_f53(const std::vector<int>& x1_vec = {1, 1, 1},
                             const std::vector<int>& x4_vec = {0, 1, 1}) {
    LinearMatroid m(5, 3);
    m.add_point("a1", {{1, 0, 0}});
    m.add_point("a2", {{0, 1, 0}});
    m.add_point("a3", {{1, 1, 0}});
    m.add_point("x2", {{0, 0, 1}});
    m.add_point("x3", {{1, 0, 1}});
    m.add_point("x1", {x1_vec});
    m.add_point("x4", {x4_vec});
    return ConfigPoints{std::move(m), {"a1", "a2", "a3", "x1", "x2", "x3", "x4"}, {}, 1, 1};
}

} // namespace

TEST_SUITE("configuration") {

TEST_CASE("translation instance passes all clauses with m=k=1") {
    ClauseReport rep = validate_mk(translation_f53());
    CHECK(rep.pass);
    CHECK(rep.first_failure() == nullptr);
}

TEST_CASE("x1 = e3 breaks clause (iv)") {
    ClauseReport rep = validate_mk(translation_f53({0, 0, 1}));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_failure() != nullptr);
    // dim(a3, x2, x1) collapses to 2 while 2m+k = 3
    const ClauseCheck* bad = nullptr;
    for (const auto& c : rep.clauses)
        if (!c.pass && c.id.rfind("iv.", 0) == 0) {
            bad = &c;
            break;
        }
    REQUIRE(bad != nullptr);
    CHECK(bad->expected == 3);
    CHECK(bad->measured == 2);
}

TEST_CASE("all-zero m=k=0 instance passes vacuously") {
    LinearMatroid m(5, 1);
    for (const char* l : {"a1", "a2", "a3", "x1", "x2", "x3", "x4"})
        m.add_point(l, {{0}});
    ConfigPoints cfg{std::move(m), {"a1", "a2", "a3", "x1", "x2", "x3", "x4"}, {}, 0, 0};
    CHECK(validate_mk(cfg).pass);
    CHECK(validate_abelian_node(cfg).pass);
}

TEST_CASE("abelian node x4 = a2 + x2 passes") {
    ClauseReport rep = validate_abelian_node(translation_f53());
    CHECK(rep.pass);
}

TEST_CASE("abelian node x4 = e3 fails inter-definability with x1") {
    ClauseReport rep = validate_abelian_node(translation_f53({1, 1, 1}, {0, 0, 1}));
    CHECK_FALSE(rep.pass);
    bool interdef_failed = false;
    for (const auto& c : rep.clauses)
        if (c.id == "x4.colinear.x1x4|a1" && !c.pass) interdef_failed = true;
    CHECK(interdef_failed);
}

TEST_CASE("missing x4 raises IncompleteConfig") {
    LinearMatroid m(5, 1);
    for (const char* l : {"a1", "a2", "a3", "x1", "x2", "x3"}) m.add_point(l, {{0}});
    ConfigPoints cfg{std::move(m), {"a1", "a2", "a3", "x1", "x2", "x3", ""}, {}, 0, 0};
    CHECK_THROWS_AS(validate_abelian_node(cfg), IncompleteConfig);
}

TEST_CASE("m < k is rejected") {
    ConfigPoints cfg = translation_f53();
    cfg.m = 0;
    cfg.k = 1;
    CHECK_THROWS_AS(validate_mk(cfg), InvalidParams);
}

TEST_CASE("unknown point label raises UnknownPoint") {
    ConfigPoints cfg = translation_f53();
    cfg.labels[0] = "nope";
    CHECK_THROWS_AS(validate_mk(cfg), UnknownPoint);
}

TEST_CASE("role permutation x1<->x3, a1<->a2 revalidates consistently") {
    // The permuted tuple passes iff its co-linearity relations still hold;
    // re-validation is the arbiter.
    ConfigPoints cfg = translation_f53();
    ConfigPoints permuted = cfg;
    std::swap(permuted.labels[static_cast<int>(Role::x1)],
              permuted.labels[static_cast<int>(Role::x3)]);
    std::swap(permuted.labels[static_cast<int>(Role::a1)],
              permuted.labels[static_cast<int>(Role::a2)]);
    ClauseReport rep = validate_mk(permuted);
    bool colinear_ok = permuted.matroid.interdefinable(
                           permuted.label(Role::x2), permuted.label(Role::x3),
                           {permuted.label(Role::a1)}) &&
                       permuted.matroid.interdefinable(
                           permuted.label(Role::x1), permuted.label(Role::x2),
                           {permuted.label(Role::a3)}) &&
                       permuted.matroid.interdefinable(
                           permuted.label(Role::x1), permuted.label(Role::x3),
                           {permuted.label(Role::a2)});
    CHECK(rep.pass == colinear_ok);
    CHECK_FALSE(rep.pass);  // this permutation breaks the lines here
}

TEST_CASE("generated matroid instances pass, for each (p, m)") {
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
        ConfigPoints cfg = gen_matroid_instance(p, m);
        CHECK(cfg.m == cfg.k);
        CHECK(validate_mk(cfg).pass);
        CHECK(validate_abelian_node(cfg).pass);
    }
}

}
