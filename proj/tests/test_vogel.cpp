#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqd/vogel.hpp"

using namespace uqd;

TEST_CASE("algebra id parsing") {
    CHECK(AlgebraId::parse("A3") == AlgebraId{'A', 3});
    CHECK(AlgebraId::parse("so8") == AlgebraId{'D', 4});
    CHECK(AlgebraId::parse("E8") == AlgebraId{'E', 8});
    CHECK(AlgebraId::parse("G2") == AlgebraId{'G', 2});
    CHECK_THROWS_AS(AlgebraId::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("B1"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("C2"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("Q5"), std::invalid_argument);
}

TEST_CASE("table points") {
    auto so8 = vogel_point(AlgebraId::parse("so8"));
    CHECK(so8 == VogelPoint{rat(-2), rat(4), rat(4)});
    CHECK(so8.t() == rat(6));

    auto e8 = vogel_point(AlgebraId::parse("E8"));
    CHECK(e8 == VogelPoint{rat(-2), rat(12), rat(20)});
    CHECK(e8.t() == rat(30));

    auto g2 = vogel_point(AlgebraId::parse("G2"));
    CHECK(g2 == VogelPoint{rat(-2), rat(10, 3), rat(8, 3)});
    CHECK(g2.t() == rat(4));

    CHECK(vogel_point(AlgebraId::parse("A1")) == VogelPoint{rat(-2), rat(2), rat(2)});
    CHECK(vogel_point(AlgebraId::parse("B5")) == VogelPoint{rat(-2), rat(4), rat(7)});
    CHECK(vogel_point(AlgebraId::parse("C4")) == VogelPoint{rat(-2), rat(1), rat(6)});
    CHECK(vogel_point(AlgebraId::parse("F4")) == VogelPoint{rat(-2), rat(5), rat(6)});
    CHECK(vogel_point(AlgebraId::parse("E6")) == VogelPoint{rat(-2), rat(6), rat(8)});
    CHECK(vogel_point(AlgebraId::parse("E7")) == VogelPoint{rat(-2), rat(8), rat(12)});
}

TEST_CASE("every table point lies on its line") {
    for (const char* name : {"A1", "A2", "A7", "B2", "B6", "C3", "C9", "D4", "D5", "G2",
                             "F4", "E6", "E7", "E8"}) {
        AlgebraId id = AlgebraId::parse(name);
        for (Line l : lines_of(id)) {
            CAPTURE(name);
            CHECK(lies_on(vogel_point(id), l));
        }
    }
    // so8 belongs to both the orthogonal and exceptional lines
    auto so8 = AlgebraId::parse("so8");
    CHECK(lines_of(so8).size() == 2);
}

TEST_CASE("permutations") {
    VogelPoint p{rat(-2), rat(4), rat(4)};
    CHECK(permute(p, Perm3::parse("bag")) == VogelPoint{rat(4), rat(-2), rat(4)});
    CHECK(permute(p, Perm3::parse("abg")) == p);
    VogelPoint q{rat(-2), rat(2), rat(7)};
    CHECK(permute(q, Perm3::parse("gab")) == VogelPoint{rat(7), rat(-2), rat(2)});
    CHECK(permute(p, Perm3::parse("bag")).t() == p.t());
    CHECK_THROWS_AS(Perm3::parse("aab"), std::invalid_argument);
    CHECK_THROWS_AS(Perm3::parse("xyz"), std::invalid_argument);
    CHECK(Perm3::parse("bag").to_string() == "bag");
}

TEST_CASE("line constraints and canonical paths") {
    CHECK(line_constraint(Line::SO).eval(rat(-2), rat(4), rat(99)) == rat(0));
    CHECK(line_constraint(Line::SL).eval(rat(-2), rat(2), rat(5)) == rat(0));
    CHECK(line_constraint(Line::SP).eval(rat(-2), rat(1), rat(17)) == rat(0));
    CHECK(line_constraint(Line::EXC).eval(rat(-2), rat(12), rat(20)) == rat(0));
    CHECK(line_constraint(Line::EXC).eval(rat(-2), rat(20), rat(12)) == rat(24));

    for (Line l : {Line::SL, Line::SO, Line::SP, Line::EXC}) {
        auto d = canonical_direction(l);
        CHECK(line_constraint(l).eval(d.da, d.db, d.dg) == rat(0));
        auto d2 = secondary_direction(l);
        CHECK(line_constraint(l).eval(d2.da, d2.db, d2.dg) == rat(0));
        // directions are independent
        bool parallel = d.da * d2.db == d.db * d2.da && d.da * d2.dg == d.dg * d2.da &&
                        d.db * d2.dg == d.dg * d2.db;
        CHECK_FALSE(parallel);
    }

    auto path = canonical_path(Line::SO, vogel_point(AlgebraId::parse("so8")));
    for (long long s : {-3, 1, 7}) {
        CHECK(lies_on(path.at(rat(s)), Line::SO));
    }
    CHECK_THROWS_AS(canonical_path(Line::SP, vogel_point(AlgebraId::parse("so8"))),
                    std::invalid_argument);
}

TEST_CASE("line parsing") {
    CHECK(parse_line("so") == Line::SO);
    CHECK(parse_line("exc") == Line::EXC);
    CHECK_THROWS_AS(parse_line("ex"), std::invalid_argument);
}
