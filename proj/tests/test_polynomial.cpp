#include <antilimit/polynomial.hpp>

#include <catch_amalgamated.hpp>

#include "support/independent.hpp"

#include <algorithm>
#include <random>

using antilimit::Parity;
using antilimit::Point;
using antilimit::Polynomial;
using antilimit::PolyOp;
using antilimit::Rational;

namespace {

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(c); }

Rational R(long n, long d = 1) { return Rational(n, d); }

} // namespace

TEST_CASE("interpolate through the eta(-1) odd sums", "[polynomial][interpolate]") {
    auto p = antilimit::interpolate(std::vector<Point>{{R(1), R(1)}, {R(3), R(2)}});
    CHECK(p == P({R(1, 2), R(1, 2)}));
}

TEST_CASE("interpolate a single point gives a constant", "[polynomial][interpolate]") {
    auto p = antilimit::interpolate(std::vector<Point>{{R(2), R(-1)}});
    CHECK(p == Polynomial::constant(R(-1)));
    CHECK(p.degree() == 0u);
}

TEST_CASE("interpolate the eta(-3) odd sums matches an independent linear solve", "[polynomial][interpolate]") {
    auto sums = indep::brute_partial_sums(antilimit::Family::eta, -3, 7);
    std::vector<Point> pts;
    std::vector<Rational> xs, ys;
    for (std::size_t m = 1; m <= 7; m += 2) {
        pts.push_back({R(static_cast<long>(m)), sums[m - 1]});
        xs.push_back(R(static_cast<long>(m)));
        ys.push_back(sums[m - 1]);
    }
    REQUIRE(ys == std::vector<Rational>{R(1), R(20), R(81), R(208)});
    auto p = antilimit::interpolate(pts);
    CHECK(p.coeffs() == indep::solve_vandermonde(xs, ys));
    CHECK(p == P({R(-1, 4), R(0), R(3, 4), R(1, 2)}));
}

TEST_CASE("duplicate abscissae are rejected", "[polynomial][interpolate]") {
    CHECK_THROWS_AS(antilimit::interpolate(std::vector<Point>{{R(1), R(1)}, {R(1), R(2)}}),
                    antilimit::duplicate_abscissa);
    CHECK_THROWS_AS(antilimit::interpolate(std::vector<Point>{}), antilimit::domain_error);
}

TEST_CASE("interpolation round-trips random polynomials", "[polynomial][interpolate][property]") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-20, 20), den(1, 9), deg(0, 8);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> c;
        const long d = deg(rng);
        for (long i = 0; i <= d; ++i)
            c.emplace_back(coef(rng), den(rng));
        if (c.back().is_zero())
            c.back() = R(1);
        Polynomial p(c);
        std::vector<Point> pts;
        std::vector<Rational> used;
        while (pts.size() < static_cast<std::size_t>(d + 1)) {
            Rational x(coef(rng), den(rng));
            if (std::find(used.begin(), used.end(), x) != used.end())
                continue;
            used.push_back(x);
            pts.push_back({x, p(x)});
        }
        auto q = antilimit::interpolate(pts);
        REQUIRE(q == p);
        for (const auto& pt : pts)
            REQUIRE(q(pt.x) == pt.y);
    }
}

TEST_CASE("exact evaluation", "[polynomial]") {
    CHECK(antilimit::poly_eval(P({R(1, 2), R(1, 2)}), R(3)) == R(2));
    CHECK(antilimit::poly_eval(Polynomial(), R(123, 7)) == R(0));
    CHECK(antilimit::poly_eval(P({R(-1), R(0), R(2)}), R(3)) == R(17));
}

TEST_CASE("coefficient arithmetic", "[polynomial]") {
    const Polynomial po = P({R(-1, 4), R(0), R(3, 4), R(1, 2)});
    CHECK(antilimit::poly_arith(P({R(1, 2), R(1, 2)}), P({R(0), R(-1, 2)}), PolyOp::add) ==
          Polynomial::constant(R(1, 2)));
    CHECK(antilimit::poly_arith(po, {}, PolyOp::scale, R(1)) == po);
    const Polynomial pe = -po - Polynomial::constant(R(1, 4));
    CHECK(antilimit::poly_arith(po, pe, PolyOp::sub) == P({R(-1, 4), R(0), R(3, 2), R(1)}));
    CHECK(antilimit::poly_arith(po, {}, PolyOp::negate) == -po);
    CHECK(antilimit::poly_arith(po, {}, PolyOp::scale, R(0)).is_zero());
}

TEST_CASE("zero polynomial has no degree", "[polynomial]") {
    Polynomial z;
    CHECK_FALSE(z.degree().has_value());
    CHECK(z.is_zero());
    CHECK((P({R(1), R(2)}) - P({R(1), R(2)})).is_zero());
}

TEST_CASE("division, gcd and square-free part", "[polynomial]") {
    // (x - 1)^2 (x + 2)
    const Polynomial f = P({R(2), R(-3), R(0), R(1)});
    auto [q, r] = antilimit::divmod(f, P({R(-1), R(1)}));
    CHECK(r.is_zero());
    CHECK(q == P({R(-2), R(1), R(1)}));
    CHECK(antilimit::square_free_part(f) == P({R(-2), R(1), R(1)}));
    CHECK(antilimit::gcd(f, antilimit::derivative(f)) == P({R(-1), R(1)}));
    CHECK_THROWS_AS(antilimit::divmod(f, Polynomial()), antilimit::domain_error);
}

TEST_CASE("parity about a center with an offset", "[polynomial][parity]") {
    CHECK(antilimit::parity_about(P({R(-1), R(0), R(2)}), R(0), R(0)) == Parity::even);
    CHECK(antilimit::parity_about(P({R(0), R(1)}), R(0), R(0)) == Parity::odd);
    CHECK(antilimit::parity_about(P({R(1, 2), R(1, 2)}), R(-1, 2), R(1, 4)) == Parity::odd);
    CHECK(antilimit::parity_about(P({R(1), R(1)}), R(0), R(0)) == Parity::neither);
}

TEST_CASE("taylor shift matches direct evaluation", "[polynomial]") {
    const Polynomial p = P({R(3), R(-2, 3), R(0), R(5, 2)});
    const auto q = antilimit::taylor_shift(p, R(-7, 3));
    for (long x = -3; x <= 3; ++x)
        CHECK(q(R(x)) == p(R(x) + R(-7, 3)));
}

TEST_CASE("descending text form", "[polynomial]") {
    CHECK(antilimit::to_string(P({R(-1, 4), R(0), R(3, 4), R(1, 2)})) == "1/2*x^3 + 3/4*x^2 - 1/4");
    CHECK(antilimit::to_string(P({R(0), R(-1)})) == "-x");
    CHECK(antilimit::to_string(Polynomial()) == "0");
}
