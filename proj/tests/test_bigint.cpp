#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqd/bigint.hpp"

#include <cstdint>
#include <random>

using uqd::BigInt;

namespace {

std::mt19937_64 rng(20240517);

BigInt random_bigint(int max_limbs) {
    std::uniform_int_distribution<int> limbs(1, max_limbs);
    std::uniform_int_distribution<std::uint32_t> digit(0, 999999999u);
    std::uniform_int_distribution<int> coin(0, 1);
    int n = limbs(rng);
    std::string s = coin(rng) ? "-" : "";
    bool leading = true;
    for (int i = 0; i < n; ++i) {
        std::uint32_t d = digit(rng);
        if (leading && d == 0) d = 1;
        char buf[16];
        std::snprintf(buf, sizeof buf, leading ? "%u" : "%09u", d);
        s += buf;
        leading = false;
    }
    return BigInt::from_string(s);
}

} // namespace

TEST_CASE("small arithmetic matches built-in integers") {
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
    }
}

TEST_CASE("string round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt::from_string("00123").to_string() == "123");
    CHECK(BigInt::from_string("-987654321987654321987654321").to_string() ==
          "-987654321987654321987654321");
    for (int i = 0; i < 200; ++i) {
        BigInt x = random_bigint(6);
        CHECK(BigInt::from_string(x.to_string()) == x);
    }
}

TEST_CASE("division identity on random large values") {
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_bigint(8);
        BigInt b = random_bigint(4);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("multiplication is commutative and associative on random values") {
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_bigint(5), b = random_bigint(5), c = random_bigint(3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("gcd and lcm") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::lcm(BigInt(4), BigInt(6)) == BigInt(12));
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_bigint(4), b = random_bigint(4);
        BigInt g = BigInt::gcd(a, b);
        if (g.is_zero()) continue;
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("comparisons") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-5) < BigInt(-3));
    BigInt big = BigInt::from_string("100000000000000000000");
    CHECK(BigInt(999) < big);
    CHECK(-big < BigInt(-999));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("factorial spot check") {
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
}
