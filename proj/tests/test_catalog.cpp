#include <set>

#include "doctest.h"
#include "gamma3/catalog.hpp"
#include "gamma3/errors.hpp"

using namespace gamma3;

namespace {

const std::set<std::string> kNonsymmorphic = {"pg", "pmg2", "pgg2", "p4mg"};

LatticeVector lv(const TriadicHalf& a, const TriadicHalf& b) { return {a, b}; }

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("all seventeen groups load") {
    CHECK(GroupData::names().size() == 17);
    int nonsym = 0;
    for (const std::string& name : GroupData::names()) {
        const GroupData& gd = GroupData::get(name);
        CHECK(gd.name() == name);
        CHECK(gd.order() >= 1);
        if (!gd.symmorphic()) ++nonsym;
    }
    CHECK(nonsym == 4);
}

TEST_CASE("synonyms and unknown names") {
    CHECK(GroupData::get("pmg").name() == "pmg2");
    CHECK(GroupData::get("pgg").name() == "pgg2");
    CHECK(GroupData::get("p4g").name() == "p4mg");
    CHECK(GroupData::get("P4M").name() == "p4m");
    CHECK_THROWS_AS(GroupData::get("p5"), UnknownGroup);
}

TEST_CASE("pg structure") {
    const GroupData& pg = GroupData::get("pg");
    CHECK(pg.order() == 2);
    CHECK(pg.point(0).name == "id");
    CHECK(pg.point(1).name == "s");
    CHECK(pg.point(1).is_reflection);
    CHECK(pg.d0() == std::vector<int>{0});
    CHECK_FALSE(pg.symmorphic());
    // t_S = v/2, z = v.
    CHECK(pg.offset(1) == lv(TriadicHalf(0), TriadicHalf::one_half()));
    REQUIRE(pg.glide_z().has_value());
    CHECK(*pg.glide_z() == lv(TriadicHalf(0), TriadicHalf(1)));
    // Lemma normalization: u=(1,0), v=(0,1).
    CHECK(pg.basis().a == 1.0);
    CHECK(pg.basis().d == 1.0);
}

TEST_CASE("p1 is trivial and symmorphic") {
    const GroupData& p1 = GroupData::get("p1");
    CHECK(p1.order() == 1);
    CHECK(p1.symmorphic());
    CHECK_FALSE(p1.glide_z().has_value());
}

TEST_CASE("pgg2 offsets come from closure") {
    const GroupData& g = GroupData::get("pgg2");
    CHECK(g.order() == 4);
    const int s = g.find_name("s");
    const int r1s = g.find_name("r1s");
    REQUIRE(s >= 0);
    REQUIRE(r1s >= 0);
    const LatticeVector half_uv{TriadicHalf::one_half(), TriadicHalf::one_half()};
    // Both reflections carry (u+v)/2; D^0 is the rotation subgroup.
    CHECK(g.offset(s) == half_uv);
    CHECK(g.offset(r1s) == half_uv);
    CHECK(g.d0() == std::vector<int>{0, 1});
}

TEST_CASE("pmg2 both reflections carry v/2") {
    const GroupData& g = GroupData::get("pmg2");
    const LatticeVector half_v{TriadicHalf(0), TriadicHalf::one_half()};
    CHECK(g.offset(g.find_name("s")) == half_v);
    CHECK(g.offset(g.find_name("r1s")) == half_v);
    CHECK(g.d0() == std::vector<int>{0, 1});
}

TEST_CASE("point groups are closed, orthogonal, with exact cocycle") {
    for (const std::string& name : GroupData::names()) {
        const GroupData& gd = GroupData::get(name);
        for (int i = 0; i < gd.order(); ++i) {
            CHECK((gd.point(i).mat_lat.det() == 1 || gd.point(i).mat_lat.det() == -1));
            CHECK(gd.point(i).is_reflection == (gd.point(i).mat_lat.det() == -1));
            const Mat2 m = gd.point(i).cart;
            const Mat2 gram = m.transpose().mul(m);
            CHECK(std::fabs(gram.a - 1) <= 1e-12);
            CHECK(std::fabs(gram.d - 1) <= 1e-12);
            CHECK(std::fabs(gram.b) <= 1e-12);
            CHECK(std::fabs(gram.c) <= 1e-12);
            for (int j = 0; j < gd.order(); ++j) {
                const int k = gd.mul(i, j);
                CHECK(gd.point(k).mat_lat == gd.point(i).mat_lat.mul(gd.point(j).mat_lat));
                const LatticeVector want =
                    (apply(gd.point(j).mat_lat.inverse(), gd.offset(i)) + gd.offset(j))
                        .mod_lattice();
                CHECK(want == gd.offset(k));
            }
            CHECK(gd.mul(i, gd.inv(i)) == 0);
        }
    }
}

TEST_CASE("frozen offset tables") {
    // Regeneration check: closure must reproduce these exact tables.
    struct Frozen {
        const char* group;
        const char* elem;
        int num_a, num_b;  // offset = (num_a/2) u + (num_b/2) v
    };
    const Frozen table[] = {
        {"pg", "id", 0, 0},    {"pg", "s", 0, 1},
        {"pmg2", "s", 0, 1},   {"pmg2", "r1s", 0, 1},  {"pmg2", "r1", 0, 0},
        {"pgg2", "s", 1, 1},   {"pgg2", "r1s", 1, 1},
        {"p4mg", "s", 1, 1},   {"p4mg", "r1s", 1, 1},
        {"p4mg", "r2s", 1, 1}, {"p4mg", "r3s", 1, 1},  {"p4mg", "r2", 0, 0},
    };
    for (const Frozen& f : table) {
        const GroupData& gd = GroupData::get(f.group);
        const int i = gd.find_name(f.elem);
        REQUIRE(i >= 0);
        const LatticeVector want{TriadicHalf::make(f.num_a, 0, true),
                                 TriadicHalf::make(f.num_b, 0, true)};
        CHECK(gd.offset(i) == want);
    }
    for (const std::string& name : GroupData::names())
        CHECK(GroupData::get(name).symmorphic() == (kNonsymmorphic.count(name) == 0));
}

TEST_CASE("compatibility of dilations") {
    CHECK(check_compatibility(GroupData::get("pg"), 3));
    CHECK_FALSE(check_compatibility(GroupData::get("pg"), 2));
    CHECK(check_compatibility(GroupData::get("p4"), 2));
    for (const std::string& name : GroupData::names()) {
        const GroupData& gd = GroupData::get(name);
        for (int d : {3, 5, 7, 9}) CHECK(check_compatibility(gd, d));
        for (int d : {2, 4})
            CHECK(check_compatibility(gd, d) == (kNonsymmorphic.count(name) == 0));
    }
    CHECK_THROWS_AS(check_compatibility(GroupData::get("p1"), 1), std::invalid_argument);
}

TEST_CASE("membership levels") {
    const GroupData& pg = GroupData::get("pg");
    const int s = pg.find_name("s");
    // Glide [v/2, S] is in pg itself.
    CHECK(member_gamma(pg, lv(TriadicHalf(0), TriadicHalf::one_half()), s));
    // [0, S] is never in any conjugate (3^l * 0 stays off the coset).
    CHECK_FALSE(member_gamma3(pg, LatticeVector{}, s).has_value());

    const GroupData& p1 = GroupData::get("p1");
    const LatticeVector x{TriadicHalf::make(1, 2, false), TriadicHalf(0)};  // (1/9, 0)
    CHECK_FALSE(member_gamma(p1, x, 0));
    CHECK(member_gamma3(p1, x, 0) == std::optional<int>(2));

    CHECK_THROWS_AS(member_gamma(p1, x, 5), PointNotInGroup);
}

TEST_CASE("rectangular aspect is configurable") {
    const GroupData pm3 = GroupData::make("pm", 3);
    CHECK(pm3.basis().d == 3.0);
    const Vec2 c = pm3.to_cartesian({TriadicHalf(0), TriadicHalf(1)});
    CHECK(c.y == 3.0);
    // Point data is aspect-independent.
    CHECK(pm3.order() == GroupData::get("pm").order());
}

}  // TEST_SUITE
