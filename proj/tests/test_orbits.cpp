#include "doctest.h"
#include "gamma3/orbits.hpp"
#include "gamma3/sampling.hpp"

using namespace gamma3;

TEST_SUITE("orbits") {

TEST_CASE("sector bounds per point group") {
    CHECK(GroupData::get("p4").theta1() == doctest::Approx(0.0));
    CHECK(GroupData::get("p4").theta2() == doctest::Approx(kPi / 2));
    CHECK(GroupData::get("p1").theta2() == doctest::Approx(kTwoPi));
    CHECK(GroupData::get("p4m").theta2() == doctest::Approx(kPi / 4));
    CHECK(GroupData::get("pm").theta1() == doctest::Approx(-kPi / 2));
    CHECK(GroupData::get("p3m1").theta1() == doctest::Approx(kPi / 6));
    CHECK(GroupData::get("p6m").theta2() - GroupData::get("p6m").theta1() ==
          doctest::Approx(kPi / 6));
}

TEST_CASE("stabilizers") {
    const GroupData& pm = GroupData::get("pm");
    CHECK(stabilizer(pm, {0, 0}).size() == 2);  // origin fixed by everything
    CHECK(stabilizer(pm, {0, 1}) == std::vector<int>{0, pm.find_name("s")});
    CHECK_FALSE(irreducible(pm, {0, 1}));
    const GroupData& p4 = GroupData::get("p4");
    CHECK(stabilizer(p4, {2, 1}) == std::vector<int>{0});
    CHECK(irreducible(p4, {2, 1}));
}

TEST_CASE("canonicalize examples for p4") {
    const GroupData& p4 = GroupData::get("p4");
    const CrossSection cs = build_cross_section(p4);

    const CanonResult a = canonicalize(cs, {-1, 2});
    REQUIRE(a.kind == CanonKind::Interior);
    CHECK(norm(a.form.omega_prime - Vec2{2, 1}) <= 1e-12);
    CHECK(a.form.point == p4.find_name("r1"));
    CHECK(a.form.ell == 0);

    const CanonResult b = canonicalize(cs, {6, 3});
    REQUIRE(b.kind == CanonKind::Interior);
    CHECK(norm(b.form.omega_prime - Vec2{2, 1}) <= 1e-12);
    CHECK(b.form.point == 0);
    CHECK(b.form.ell == 1);

    CHECK(canonicalize(cs, {0, -5}).kind == CanonKind::Boundary);
    CHECK(canonicalize(cs, {0, 0}).kind == CanonKind::Zero);
}

TEST_CASE("round trip recovers the witness") {
    Rng rng(31);
    for (const std::string& name : GroupData::names()) {
        const GroupData& gd = GroupData::get(name);
        const CrossSection cs = build_cross_section(gd);
        for (int i = 0; i < 800; ++i) {
            const Vec2 wp = random_in_cross_section(cs, rng);
            const int L = static_cast<int>(rng.range(0, gd.order() - 1));
            const int ell = static_cast<int>(rng.range(-5, 5));
            const Vec2 w = pow3d(ell) * (gd.point(L).cart * wp);
            const CanonResult c = canonicalize(cs, w);
            REQUIRE(c.kind == CanonKind::Interior);
            CHECK(c.form.point == L);
            CHECK(c.form.ell == ell);
            CHECK(norm(c.form.omega_prime - wp) <= 1e-10);
            // Witness reconstruction: omega = 3^ell L omega'.
            const Vec2 back =
                pow3d(c.form.ell) * (gd.point(c.form.point).cart * c.form.omega_prime);
            CHECK(norm(back - w) <= 1e-12 * norm(w));
            CHECK(cross_section_contains(cs, c.form.omega_prime));
        }
    }
}

TEST_CASE("denormal frequencies classify as zero") {
    const CrossSection cs = build_cross_section(GroupData::get("p4"));
    CHECK(canonicalize(cs, {5e-324, 0.0}).kind == CanonKind::Zero);
    CHECK(canonicalize(cs, {0.0, -1e-310}).kind == CanonKind::Zero);
    CHECK(canonicalize(cs, {1e-299, 0.0}).kind == CanonKind::Boundary);
}

TEST_CASE("copies of X are disjoint") {
    Rng rng(37);
    for (const std::string& name : GroupData::names()) {
        const GroupData& gd = GroupData::get(name);
        const CrossSection cs = build_cross_section(gd);
        long violations = 0;
        for (int i = 0; i < 500; ++i) {
            const Vec2 w = random_in_cross_section(cs, rng);
            for (int L = 0; L < gd.order(); ++L)
                for (int ell = -3; ell <= 3; ++ell) {
                    if (L == 0 && ell == 0) continue;
                    if (cross_section_contains(cs, pow3d(ell) * (gd.point(L).cart * w)))
                        ++violations;
                }
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("boundary set is invisible to random sampling") {
    Rng rng(41);
    for (const std::string& name : {"p1", "pmm", "p6m", "p4mg"}) {
        const GroupData& gd = GroupData::get(name);
        const CrossSection cs = build_cross_section(gd);
        long hits = 0;
        for (int i = 0; i < 4000; ++i) {
            Vec2 w = random_vec(rng, -9, 9);
            if (norm(w) < 1e-6) continue;
            const CanonResult c = canonicalize(cs, w);
            if (c.kind == CanonKind::Boundary) ++hits;
            if (c.kind == CanonKind::Interior) {
                CHECK(cross_section_contains(cs, c.form.omega_prime));
                CHECK(irreducible(gd, c.form.omega_prime));
            }
        }
        CHECK(hits == 0);
    }
}

TEST_CASE("same orbit") {
    const GroupData& p4 = GroupData::get("p4");
    Rng rng(43);
    const CrossSection cs = build_cross_section(p4);
    for (int i = 0; i < 300; ++i) {
        const Vec2 w = random_in_cross_section(cs, rng);
        const int L = static_cast<int>(rng.range(0, 3));
        const int ell = static_cast<int>(rng.range(-2, 2));
        CHECK(same_orbit(p4, w, pow3d(ell) * (p4.point(L).cart * w)));
    }
    CHECK_FALSE(same_orbit(p4, {2, 1}, {2.0001, 1}));
    // Boundary rays: the positive x-axis and positive y-axis are one p4
    // orbit; a reflected pm-boundary stays distinct.
    CHECK(same_orbit(p4, {1, 0}, {0, 3}));
    const GroupData& pm = GroupData::get("pm");
    CHECK(same_orbit(pm, {0, 1}, {0, 3}));
    CHECK_FALSE(same_orbit(pm, {0, 1}, {0, -1}));
    CHECK(same_orbit(pm, {0, 0}, {0, 0}));
}

}  // TEST_SUITE
