#include <antilimit/rational.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using antilimit::BigInt;
using antilimit::Rational;

TEST_CASE("rationals stay canonical", "[rational]") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("random arithmetic chains keep positive coprime denominators", "[rational][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> pick(-50, 50), op(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Rational acc(pick(rng), 1 + (pick(rng) + 50) % 17);
        for (int step = 0; step < 30; ++step) {
            long n = pick(rng);
            long d = 1 + (pick(rng) + 50) % 13;
            Rational x(n, d);
            switch (op(rng)) {
            case 0: acc += x; break;
            case 1: acc -= x; break;
            case 2: acc *= x; break;
            default:
                if (!x.is_zero())
                    acc /= x;
            }
            REQUIRE(acc.den() > 0);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), acc.num().get_mpz_t(), acc.den().get_mpz_t());
            REQUIRE((acc.is_zero() ? acc.den() == 1 : g == 1));
        }
    }
}

TEST_CASE("parse accepts integers and fractions", "[rational]") {
    CHECK(Rational::parse("-221930581/8") == Rational(-221930581, 8));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), antilimit::parse_error);
    CHECK_THROWS_AS(Rational::parse("x"), antilimit::parse_error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), antilimit::parse_error);
    CHECK_THROWS_AS(Rational::parse(""), antilimit::parse_error);
}

TEST_CASE("division by zero is rejected", "[rational]") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), antilimit::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), antilimit::domain_error);
}

TEST_CASE("ordering and powers", "[rational]") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(antilimit::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(antilimit::pow(Rational(2), -3) == Rational(1, 8));
    CHECK(antilimit::binomial(20, 10) == 184756);
    CHECK(antilimit::factorial(20) == BigInt("2432902008176640000"));
    CHECK(antilimit::pow_int(2, 64) == BigInt("18446744073709551616"));
}

TEST_CASE("simplest rational strictly inside an interval", "[rational]") {
    CHECK(antilimit::simplest_between(Rational(-1), Rational(1)) == Rational(0));
    CHECK(antilimit::simplest_between(Rational(1), Rational(3, 2)) == Rational(4, 3));
    CHECK(antilimit::simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
    CHECK(antilimit::simplest_between(Rational(-4, 10), Rational(-3, 10)) == Rational(-1, 3));
    CHECK(antilimit::simplest_between(Rational(7, 3), Rational(5, 2)) == Rational(12, 5));
    CHECK_THROWS_AS(antilimit::simplest_between(Rational(1), Rational(1)), antilimit::domain_error);

    // brute force over small denominators
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        if (a == b)
            continue;
        if (b < a)
            std::swap(a, b);
        Rational got = antilimit::simplest_between(a, b);
        REQUIRE(a < got);
        REQUIRE(got < b);
        for (long q = 1; q < got.den(); ++q) {
            // no fraction with a smaller denominator fits strictly inside
            Rational lo = a * Rational(q);
            BigInt p;
            mpz_fdiv_q(p.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
            Rational cand(BigInt(p + 1), BigInt(q));
            REQUIRE_FALSE(cand < b);
        }
    }
}
