#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqd/universal.hpp"

#include <cmath>
#include <random>

using namespace uqd;

namespace {

VogelPoint pt(const char* name) { return vogel_point(AlgebraId::parse(name)); }

std::mt19937_64 rng(771234);

Rational random_nonzero() {
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 4);
    long long n = num(rng);
    if (n == 0) n = 5;
    return rat(n, den(rng));
}

} // namespace

TEST_CASE("factor shapes") {
    for (auto [k, n] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 3}, {4, 4}}) {
        auto fs = l_terms({k, n});
        REQUIRE(fs.size() == 13);
        for (const auto& f : fs) CHECK(f.num.size() == f.den.size());
        CHECK(fs[2].num.size() == static_cast<std::size_t>(2 * k + n)); // L21s1
        CHECK(fs[3].num.size() == static_cast<std::size_t>(2 * k + n)); // L21s2
        CHECK(fs[5].num.size() == static_cast<std::size_t>(k));         // L10s1
        CHECK(fs[12].num.size() == static_cast<std::size_t>(k));        // Lc2
        CHECK(fs[8].num.size() == static_cast<std::size_t>(k + n));     // L11s1
        CHECK(fs[0].num.size() == 1);                                   // L31
        CHECK(fs[11].num.size() == 1);                                  // L01
    }
    // L01 at n = 1: argument 2a/4 over a/4
    auto fs = l_terms({0, 1});
    CHECK(fs[11].num[0] == LinForm3{rat(1, 2), rat(0), rat(0)});
    CHECK(fs[11].den[0] == LinForm3{rat(1, 4), rat(0), rat(0)});
}

TEST_CASE("trivial power gives the constant one at any point") {
    for (const char* name : {"A1", "A4", "B3", "C3", "D4", "D6", "G2", "F4", "E6", "E7", "E8"}) {
        auto r = universal_x({0, 0}, pt(name));
        CAPTURE(name);
        REQUIRE(r.cls == TermClass::Regular);
        CHECK(r.value == SinhProduct::one());
    }
    // also at a generic non-table point
    auto r = universal_x({0, 0}, VogelPoint{rat(3, 7), rat(-5), rat(11, 2)});
    REQUIRE(r.cls == TermClass::Regular);
    CHECK(r.value == SinhProduct::one());
}

TEST_CASE("adjoint dimension formula") {
    CHECK(adjoint_dim(pt("A2")) == rat(8));     // sl(3)
    CHECK(adjoint_dim(pt("D4")) == rat(28));    // so(8)
    CHECK(adjoint_dim(pt("E8")) == rat(248));
    CHECK(adjoint_dim(pt("G2")) == rat(14));
    CHECK(adjoint_dim(pt("F4")) == rat(52));
    CHECK(adjoint_dim(pt("E6")) == rat(78));
    CHECK(adjoint_dim(pt("E7")) == rat(133));
    CHECK(adjoint_dim(pt("A9")) == rat(99));    // sl(10)
    CHECK(adjoint_dim(pt("B5")) == rat(55));    // so(11)
    CHECK(adjoint_dim(pt("C3")) == rat(21));    // sp(6)
    CHECK_THROWS_AS(adjoint_dim(VogelPoint{rat(0), rat(1), rat(1)}), std::domain_error);
}

TEST_CASE("universal second Casimir") {
    for (const char* name : {"A3", "B4", "C5", "D4", "G2", "F4", "E8"}) {
        VogelPoint p = pt(name);
        CHECK(universal_casimir({0, 1}, p) == rat(2) * p.t());
        CHECK(universal_casimir({1, 0}, p) == rat(4) * p.t());
    }
    // C_{1,1} = -3 alpha + 6t; at so(8): 6 + 36
    CHECK(universal_casimir({1, 1}, pt("D4")) == rat(42));
}

TEST_CASE("X2 dimension forced by the antisymmetric-square identity") {
    for (const char* name : {"G2", "F4", "E6", "E7", "E8", "B3", "B6", "D4", "D7", "A2", "A5",
                             "C3", "C6"}) {
        CAPTURE(name);
        VogelPoint p = pt(name);
        auto r = universal_x({1, 0}, p);
        REQUIRE(r.cls == TermClass::Regular);
        Rational d = adjoint_dim(p);
        CHECK(r.value.dimension_limit() == d * (d - rat(3)) / rat(2));
        CHECK(r.value.balanced());
    }
}

TEST_CASE("numeric evaluation approaches the dimension for small x") {
    auto r = universal_x({1, 0}, pt("G2"));
    REQUIRE(r.cls == TermClass::Regular);
    double v = r.value.eval_numeric(0.01);
    CHECK(std::fabs(v - 77.0) / 77.0 < 0.01);
}

TEST_CASE("adjoint power dimension at small cases") {
    // (k,n) = (0,1) is the adjoint itself
    CHECK(universal_x({0, 1}, pt("A2")).value.dimension_limit() == rat(8));
    CHECK(universal_x({0, 1}, pt("E8")).value.dimension_limit() == rat(248));
    CHECK(universal_x({0, 1}, pt("G2")).value.dimension_limit() == rat(14));
}

TEST_CASE("forced zeros") {
    SUBCASE("A1 kills every positive power of the second summand") {
        for (int k = 1; k <= 4; ++k)
            for (int n = 0; n <= 3; ++n) {
                auto r = universal_x({k, n}, pt("A1"));
                CAPTURE(k);
                CAPTURE(n);
                CHECK(r.cls == TermClass::Zero);
            }
    }
    SUBCASE("C series vanishes for k >= 2") {
        for (const char* name : {"C3", "C5", "C8"})
            for (int k = 2; k <= 4; ++k)
                for (int n = 0; n <= 3; ++n) {
                    auto r = universal_x({k, n}, pt(name));
                    CAPTURE(name);
                    CAPTURE(k);
                    CAPTURE(n);
                    CHECK(r.cls == TermClass::Zero);
                }
    }
    SUBCASE("B2 vanishes for k >= 2") {
        for (int k = 2; k <= 4; ++k) {
            auto r = universal_x({k, 1}, pt("B2"));
            CHECK(r.cls == TermClass::Zero);
        }
    }
}

TEST_CASE("A-series points evaluate through a removable pair with ratio two") {
    // The (alpha+beta) numerator/denominator pair cancels to a constant and
    // the overall coefficient becomes exactly 2 (the two conjugate
    // components of the representation).
    for (const char* name : {"A2", "A3", "A7"}) {
        for (auto [k, n] : {std::pair{1, 0}, {1, 2}, {2, 1}, {3, 0}}) {
            auto r = universal_x({k, n}, pt(name));
            CAPTURE(name);
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(r.cls == TermClass::Regular);
            CHECK(r.value.coeff() == rat(2));
        }
    }
}

TEST_CASE("symmetry in the last two parameters") {
    int checked = 0;
    for (int i = 0; i < 120 && checked < 60; ++i) {
        VogelPoint p{random_nonzero(), random_nonzero(), random_nonzero()};
        VogelPoint q{p.alpha, p.gamma, p.beta};
        std::uniform_int_distribution<int> ks(0, 3), ns(0, 3);
        CartanPowerIndex idx{ks(rng), ns(rng)};
        auto a = universal_x(idx, p);
        auto b = universal_x(idx, q);
        REQUIRE(a.cls == b.cls);
        if (a.cls != TermClass::Regular) continue;
        CHECK(a.value == b.value);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("scaling covariance") {
    std::uniform_int_distribution<long long> ss(1, 9);
    int checked = 0;
    for (int i = 0; i < 80 && checked < 30; ++i) {
        VogelPoint p{random_nonzero(), random_nonzero(), random_nonzero()};
        Rational s = rat(ss(rng), ss(rng));
        VogelPoint ps{s * p.alpha, s * p.beta, s * p.gamma};
        CartanPowerIndex idx{2, 1};
        auto a = universal_x(idx, p);
        auto b = universal_x(idx, ps);
        REQUIRE(a.cls == b.cls);
        if (a.cls != TermClass::Regular) continue;
        CHECK(b.value.coeff() == a.value.coeff());
        SinhProduct::ArgMultiset scaled_num, scaled_den;
        for (const auto& [arg, m] : a.value.numerator_args()) scaled_num[s * arg] += m;
        for (const auto& [arg, m] : a.value.denominator_args()) scaled_den[s * arg] += m;
        CHECK(b.value.numerator_args() == scaled_num);
        CHECK(b.value.denominator_args() == scaled_den);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("regular outputs are balanced") {
    for (const char* name : {"A3", "B4", "C4", "D5", "G2", "F4", "E6", "E7", "E8"})
        for (int k = 0; k <= 3; ++k)
            for (int n = 0; n <= 3; ++n) {
                auto r = universal_x({k, n}, pt(name));
                if (r.cls == TermClass::Regular) CHECK(r.value.balanced());
            }
}

TEST_CASE("symmetric-square slot dimensions") {
    SUBCASE("gamma slot on the unitary series repeats the adjoint dimension") {
        for (int N : {3, 4, 7, 10}) {
            VogelPoint p = pt(("A" + std::to_string(N - 1)).c_str());
            auto y = y2_dim_slot(p, 2);
            REQUIRE_FALSE(y.singular);
            CHECK(y.value == rat(static_cast<long long>(N) * N - 1));
        }
    }
    SUBCASE("so(8) alpha slot") {
        auto y = y2_dim_slot(pt("D4"), 0);
        REQUIRE_FALSE(y.singular);
        CHECK(y.value == rat(300));
    }
    SUBCASE("so(8) beta and gamma slots degenerate") {
        CHECK(y2_dim_slot(pt("D4"), 1).singular);
        CHECK(y2_dim_slot(pt("D4"), 2).singular);
    }
    SUBCASE("symmetric-square sum rule where all slots are regular") {
        for (const char* name : {"A3", "A6", "B3", "B5", "C3", "C7", "D5", "D6", "G2", "F4",
                                 "E6", "E7", "E8"}) {
            CAPTURE(name);
            VogelPoint p = pt(name);
            Rational total(1);
            bool all_regular = true;
            for (int slot = 0; slot < 3; ++slot) {
                auto y = y2_dim_slot(p, slot);
                if (y.singular) all_regular = false;
                else total += y.value;
            }
            REQUIRE(all_regular);
            Rational d = adjoint_dim(p);
            CHECK(total == d * (d + rat(1)) / rat(2));
        }
    }
}

TEST_CASE("line limits: constants from the so(8) rows") {
    AlgebraId so8 = AlgebraId::parse("so8");
    VogelPoint target = vogel_point(so8);
    Perm3 bag = Perm3::parse("bag");
    Perm3 gab = Perm3::parse("gab");

    SUBCASE("swap-limits on the orthogonal line") {
        auto r = line_limit({1, 3}, bag, Line::SO, target);
        REQUIRE(r.status == LimitResult::Status::Value);
        CHECK(r.value == SinhProduct::constant(rat(-1)));
    }
    SUBCASE("swap-limits on the exceptional line") {
        auto r = line_limit({1, 3}, bag, Line::EXC, target);
        REQUIRE(r.status == LimitResult::Status::Value);
        CHECK(r.value == SinhProduct::constant(rat(-2)));

        auto r30 = line_limit({3, 0}, bag, Line::EXC, target);
        REQUIRE(r30.status == LimitResult::Status::Value);
        CHECK(r30.value == SinhProduct::constant(rat(3)));
    }
    SUBCASE("cycle-limits") {
        auto r = line_limit({1, 3}, gab, Line::EXC, target);
        REQUIRE(r.status == LimitResult::Status::Value);
        CHECK(r.value == SinhProduct::one());

        auto z = line_limit({1, 2}, gab, Line::EXC, target);
        CHECK(z.status == LimitResult::Status::IdenticallyZero);
    }
    SUBCASE("orthogonal-line zeros at higher powers") {
        for (auto [k, n] : {std::pair{2, 0}, {2, 1}, {3, 0}}) {
            auto r = line_limit({k, n}, bag, Line::SO, target);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(r.status == LimitResult::Status::IdenticallyZero);
        }
        for (auto [k, n] :
             {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}}) {
            auto r = line_limit({k, n}, gab, Line::SO, target);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(r.status == LimitResult::Status::IdenticallyZero);
        }
    }
}

TEST_CASE("limit value is independent of the direction inside the line") {
    AlgebraId so8 = AlgebraId::parse("so8");
    VogelPoint target = vogel_point(so8);
    for (Line line : {Line::SO, Line::EXC}) {
        for (auto [k, n] : {std::pair{1, 0}, {1, 2}, {1, 3}, {2, 1}}) {
            auto a = line_limit({k, n}, Perm3::parse("bag"), line, target,
                                canonical_direction(line));
            auto b = line_limit({k, n}, Perm3::parse("bag"), line, target,
                                secondary_direction(line));
            // also a skew direction: canonical + secondary
            auto cd = canonical_direction(line);
            auto sd = secondary_direction(line);
            LineDirection mix{cd.da + sd.da, cd.db + sd.db, cd.dg + sd.dg};
            auto c = line_limit({k, n}, Perm3::parse("bag"), line, target, mix);
            CAPTURE(static_cast<int>(line));
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(a.status == b.status);
            REQUIRE(a.status == c.status);
            if (a.status == LimitResult::Status::Value) {
                CHECK(a.value == b.value);
                CHECK(a.value == c.value);
            }
        }
    }
}

TEST_CASE("limits along a line reproduce direct evaluation at regular points") {
    // B5 lies on the orthogonal line and evaluates regularly with the
    // identity permutation.
    VogelPoint p = pt("B5");
    for (auto [k, n] : {std::pair{1, 0}, {1, 2}, {2, 1}}) {
        auto direct = universal_x({k, n}, p);
        REQUIRE(direct.cls == TermClass::Regular);
        auto lim = line_limit({k, n}, Perm3::identity(), Line::SO, p);
        REQUIRE(lim.status == LimitResult::Status::Value);
        CHECK(lim.value == direct.value);
    }
    // A-series: direct evaluation resolves the removable pair; the sl-line
    // limit must agree.
    VogelPoint a5 = pt("A5");
    for (auto [k, n] : {std::pair{1, 0}, {2, 1}}) {
        auto direct = universal_x({k, n}, a5);
        REQUIRE(direct.cls == TermClass::Regular);
        auto lim = line_limit({k, n}, Perm3::identity(), Line::SL, a5);
        REQUIRE(lim.status == LimitResult::Status::Value);
        CHECK(lim.value == direct.value);
    }
}

TEST_CASE("line limit input validation") {
    VogelPoint so8 = pt("D4");
    CHECK_THROWS_AS(line_limit({1, 0}, Perm3::identity(), Line::SP, so8), std::invalid_argument);
    CHECK_THROWS_AS(line_limit({1, 0}, Perm3::identity(), Line::SO, so8,
                               LineDirection{rat(1), rat(1), rat(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(line_limit({1, 0}, Perm3::identity(), Line::SO, so8,
                               LineDirection{rat(0), rat(0), rat(0)}),
                    std::invalid_argument);
    // scaling the point is not an admissible approach direction
    CHECK_THROWS_AS(line_limit({1, 0}, Perm3::identity(), Line::SO, so8,
                               LineDirection{rat(-2), rat(4), rat(4)}),
                    std::invalid_argument);
}
