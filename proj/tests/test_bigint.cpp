#include "folia/bigint.hpp"
#include "folia/rational.hpp"

#include <catch2/catch.hpp>
#include <random>

using namespace folia;

namespace {
std::mt19937_64 rng(20240517);

BigInt random_bigint(int words) {
    BigInt acc(0);
    for (int i = 0; i < words; ++i)
        acc = acc * BigInt((long long)1 << 32) + BigInt((long long)(rng() & 0xffffffffull));
    if (rng() & 1) acc = -acc;
    return acc;
}
}  // namespace

TEST_CASE("bigint agrees with native arithmetic on small values") {
    for (int i = 0; i < 2000; ++i) {
        long long a = (long long)(rng() % 2000001) - 1000000;
        long long b = (long long)(rng() % 2000001) - 1000000;
        REQUIRE((BigInt(a) + BigInt(b)).to_ll() == a + b);
        REQUIRE((BigInt(a) - BigInt(b)).to_ll() == a - b);
        REQUIRE((BigInt(a) * BigInt(b)).to_ll() == a * b);
        if (b != 0) {
            REQUIRE((BigInt(a) / BigInt(b)).to_ll() == a / b);
            REQUIRE((BigInt(a) % BigInt(b)).to_ll() == a % b);
        }
    }
}

TEST_CASE("bigint divmod identity on large values") {
    for (int i = 0; i < 400; ++i) {
        BigInt a = random_bigint(1 + (int)(rng() % 8));
        BigInt b = random_bigint(1 + (int)(rng() % 5));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        REQUIRE(q * b + r == a);
        REQUIRE(r.abs() < b.abs());
        if (!r.is_zero()) REQUIRE(r.sign() == a.sign());
    }
}

TEST_CASE("bigint multiplication then division is exact") {
    for (int i = 0; i < 300; ++i) {
        BigInt a = random_bigint(1 + (int)(rng() % 6));
        BigInt b = random_bigint(1 + (int)(rng() % 6));
        if (a.is_zero() || b.is_zero()) continue;
        REQUIRE((a * b) / a == b);
        REQUIRE((a * b) % b == BigInt(0));
    }
}

TEST_CASE("bigint gcd properties") {
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_bigint(1 + (int)(rng() % 4));
        BigInt b = random_bigint(1 + (int)(rng() % 4));
        BigInt g = BigInt::gcd(a, b);
        if (g.is_zero()) {
            REQUIRE(a.is_zero());
            REQUIRE(b.is_zero());
            continue;
        }
        REQUIRE((a % g).is_zero());
        REQUIRE((b % g).is_zero());
        // associativity against a third value
        BigInt c = random_bigint(2);
        REQUIRE(BigInt::gcd(BigInt::gcd(a, b), c) == BigInt::gcd(a, BigInt::gcd(b, c)));
    }
}

TEST_CASE("bigint decimal round trip") {
    for (int i = 0; i < 100; ++i) {
        BigInt a = random_bigint(1 + (int)(rng() % 7));
        REQUIRE(BigInt(a.str()) == a);
    }
    REQUIRE(BigInt("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
}

TEST_CASE("bigint square detection") {
    for (int i = 0; i < 100; ++i) {
        BigInt a = random_bigint(1 + (int)(rng() % 4)).abs();
        BigInt root;
        REQUIRE((a * a).is_square(&root));
        REQUIRE(root == a.abs());
    }
    REQUIRE_FALSE(BigInt(2).is_square());
    REQUIRE_FALSE(BigInt(-4).is_square());
}

TEST_CASE("rational arithmetic is exact field arithmetic") {
    for (int i = 0; i < 500; ++i) {
        long long n1 = (long long)(rng() % 401) - 200, d1 = (long long)(rng() % 200) + 1;
        long long n2 = (long long)(rng() % 401) - 200, d2 = (long long)(rng() % 200) + 1;
        Rational a(n1, d1), b(n2, d2);
        REQUIRE(a + b - b == a);
        if (!b.is_zero()) REQUIRE(a * b / b == a);
        REQUIRE((a - a).is_zero());
        if (!a.is_zero()) REQUIRE(a * a.inverse() == Rational(1));
    }
    REQUIRE(Rational(4, 6) == Rational(2, 3));
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational::parse("3/4").str() == "3/4");
    REQUIRE(Rational(9, 4).is_square());
    REQUIRE_FALSE(Rational(2, 3).is_square());
}
