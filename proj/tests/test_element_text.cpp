#include "doctest.h"
#include "gamma3/element_text.hpp"
#include "gamma3/errors.hpp"
#include "gamma3/sampling.hpp"

using namespace gamma3;

TEST_SUITE("element_text") {

TEST_CASE("parse examples") {
    const GroupData& p1 = GroupData::get("p1");
    CHECK(parse_element(p1, "([0 u + 0 v, id], 0)") == identity_element());

    const GroupData& pg = GroupData::get("pg");
    const WaveletElement g = parse_element(pg, "([1/3 u + 0 v + 1/2 z, s], -2)");
    CHECK(g.x.a == TriadicHalf::make(1, 1, false));
    CHECK(g.x.b == TriadicHalf::one_half());
    CHECK(g.point == pg.find_name("s"));
    CHECK(g.ell == -2);

    CHECK_THROWS_AS(parse_element(p1, "([1 u, id], 0)"), ParseError);
}

TEST_CASE("whitespace insensitivity and signs") {
    const GroupData& p2 = GroupData::get("p2");
    const WaveletElement a = parse_element(p2, "([-1/3u+2v,r1],3)");
    const WaveletElement b = parse_element(p2, "( [ -1/3 u  +  2 v ,  R1 ] , +3 )");
    CHECK(a == b);
    CHECK(parse_element(p2, "([0 u - 1 v, id], 0)") ==
          parse_element(p2, "([0 u + -1 v, id], 0)"));
}

TEST_CASE("errors carry positions and group context") {
    const GroupData& p1 = GroupData::get("p1");
    try {
        parse_element(p1, "([1 u + 1 w, id], 0)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 10);
    }
    // z term in a symmorphic group.
    CHECK_THROWS_AS(parse_element(p1, "([0 u + 0 v + 1/2 z, id], 0)"), InvalidElement);
    // Unknown point element.
    CHECK_THROWS_AS(parse_element(p1, "([0 u + 0 v, r1], 0)"), InvalidElement);
    // Grammar demands exactly 1/2 z.
    CHECK_THROWS_AS(parse_element(GroupData::get("pg"), "([0 u + 0 v + 1/3 z, s], 0)"),
                    ParseError);
    // Invalid coordinates for the group.
    CHECK_THROWS_AS(parse_element(p1, "([1/2 u + 0 v, id], 0)"), InvalidElement);
}

TEST_CASE("round trip on random elements") {
    Rng rng(101);
    for (const std::string& name : GroupData::names()) {
        const GroupData& gd = GroupData::get(name);
        for (int i = 0; i < 10000; ++i) {
            const WaveletElement g = random_element(gd, rng, 6, 3, 4);
            CHECK(parse_element(gd, print_element(gd, g)) == g);
        }
    }
}

TEST_CASE("printer emits the documented forms") {
    const GroupData& pg = GroupData::get("pg");
    const WaveletElement g{{TriadicHalf::make(-5, 1, false), TriadicHalf::make(1, 2, true)},
                           pg.find_name("s"),
                           2};
    CHECK(print_element(pg, g) == "([-5/3 u + 1/(2*3^2) v, s], 2)");
    const WaveletElement h{{TriadicHalf(0), TriadicHalf(-1)}, 0, 0};
    CHECK(print_element(pg, h) == "([0 u - 1 v, id], 0)");
}

TEST_CASE("mutated element text never crashes the parser") {
    Rng rng(211);
    const GroupData& pg = GroupData::get("pg");
    const std::string base = "([1/3 u + 1/(2*3^2) v, s], -2)";
    const std::string alphabet = "([]),+-/*^ 0123uvzsrid";
    for (int i = 0; i < 4000; ++i) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng.range(0, 3));
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = static_cast<std::size_t>(rng.range(0, 29));
            const char c = alphabet[static_cast<std::size_t>(
                rng.range(0, static_cast<long long>(alphabet.size()) - 1))];
            if (rng.range(0, 1) == 0 && pos < text.size())
                text[pos] = c;
            else
                text.insert(std::min(pos, text.size()), 1, c);
        }
        try {
            const WaveletElement g = parse_element(pg, text);
            CHECK(parse_element(pg, print_element(pg, g)) == g);
        } catch (const ParseError&) {
        } catch (const InvalidElement&) {
        }
    }
}

TEST_CASE("finitely supported vector grammar") {
    const GroupData& pg = GroupData::get("pg");
    const FinSuppVector f = parse_finsupp(pg, "(id,0):1,0; (s,-1):0.5,-0.25");
    CHECK(f.size() == 2);
    CHECK(f.at(0, 0) == Complex{1.0, 0.0});
    CHECK(f.at(pg.find_name("s"), -1) == Complex{0.5, -0.25});
    CHECK(parse_finsupp(pg, "").empty());
    CHECK_THROWS_AS(parse_finsupp(pg, "(id,0):1"), ParseError);
    CHECK_THROWS_AS(parse_finsupp(pg, "(r9,0):1,0"), InvalidElement);
}

}  // TEST_SUITE
