#include <antilimit/roots.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using antilimit::HPComplex;
using antilimit::HPReal;
using antilimit::IntegerForm;
using antilimit::Polynomial;
using antilimit::Rational;
using antilimit::SturmSequence;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(R(1));
    for (const auto& r : roots)
        p = p * Polynomial::linear_root(r);
    return p;
}

} // namespace

TEST_CASE("integer form keeps the sign of every value", "[roots]") {
    const Polynomial p({R(-3, 4), R(5, 6), R(0), R(-7, 10)});
    IntegerForm f(p);
    for (long n = -20; n <= 20; ++n) {
        Rational x(n, 3);
        CHECK(f.sign_at(x) == p(x).sign());
    }
}

TEST_CASE("Sturm counts distinct real roots", "[roots][sturm]") {
    // roots -2, 1/3, 1/2, 5
    const auto p = from_roots({R(-2), R(1, 3), R(1, 2), R(5)});
    SturmSequence s(p);
    CHECK(s.count_all() == 4);
    CHECK(s.count(R(0), R(1)) == 2);
    CHECK(s.count(R(-2), R(0)) == 0); // (a, b] excludes a
    CHECK(s.count(R(-3), R(-2)) == 1);
    CHECK(s.count_above(R(2)) == 1);
    // x^2 + 1 has none
    CHECK(SturmSequence(Polynomial({R(1), R(0), R(1)})).count_all() == 0);
    CHECK_THROWS_AS(SturmSequence(Polynomial()), antilimit::domain_error);
}

TEST_CASE("rational roots are recovered exactly, repeated ones once", "[roots]") {
    const std::vector<Rational> roots{R(-7, 3), R(-1, 2), R(0), R(2, 5), R(9)};
    auto p = from_roots(roots) * from_roots({R(-1, 2), R(9)}) * R(-5, 7);
    auto rr = antilimit::real_roots(p, Rational(antilimit::BigInt(1), antilimit::pow10(40)));
    CHECK(rr.rational == roots);
    CHECK(rr.irrational.empty());
}

TEST_CASE("irrational roots are isolated to the requested width", "[roots]") {
    // (x^2 - 2)(x - 1/3)(x^2 + x + 1)
    auto p = Polynomial({R(-2), R(0), R(1)}) * Polynomial::linear_root(R(1, 3)) * Polynomial({R(1), R(1), R(1)});
    const Rational width(antilimit::BigInt(1), antilimit::pow10(30));
    auto rr = antilimit::real_roots(p, width);
    REQUIRE(rr.rational == std::vector<Rational>{R(1, 3)});
    REQUIRE(rr.irrational.size() == 2);
    for (const auto& iv : rr.irrational) {
        CHECK(iv.hi - iv.lo < width);
        // x^2 - 2 changes sign across the interval
        CHECK((iv.lo * iv.lo - R(2)).sign() * (iv.hi * iv.hi - R(2)).sign() < 0);
    }
    CHECK(rr.irrational[0].hi < R(0));
    CHECK(rr.irrational[1].lo > R(0));
}

TEST_CASE("clustered roots separate", "[roots]") {
    auto p = from_roots({R(1, 1000), R(2, 1000), R(1, 999)});
    auto rr = antilimit::real_roots(p, R(1, 1000000));
    CHECK(rr.rational == std::vector<Rational>{R(1, 1000), R(1, 999), R(2, 1000)});
}

TEST_CASE("bounds enclose every root", "[roots]") {
    const auto p = from_roots({R(-40), R(3), R(17, 2)});
    CHECK(antilimit::cauchy_bound(p) > R(40));
    CHECK(antilimit::root_radius(p) >= R(40));
}

TEST_CASE("complex roots by Aberth iteration", "[roots][complex]") {
    const int digits = 50;
    const auto tol = antilimit::ten_to_minus(digits - 3, digits + 10);
    auto check_roots = [&](const Polynomial& p) {
        auto zs = antilimit::complex_roots_all(p, digits);
        REQUIRE(zs.size() == p.degree().value());
        for (const auto& z : zs) {
            auto v = antilimit::poly_eval_complex(p, z.rescaled(digits + 10));
            REQUIRE(v.abs() <= tol);
        }
        return zs;
    };
    check_roots(Polynomial({R(1), R(0), R(1)}));
    check_roots(Polynomial({R(1), R(0), R(0), R(0), R(1)}));
    check_roots(Polynomial({R(1), R(1), R(1)}));
    check_roots(Polynomial({R(-1, 8), R(0), R(-21, 4), R(3, 2), R(0), R(1, 2), R(0), R(1)}));

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> c(-9, 9), d(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> coeffs;
        for (int i = 0; i < 7; ++i)
            coeffs.emplace_back(c(rng), d(rng));
        coeffs.emplace_back(1 + (c(rng) + 9) % 5);
        Polynomial p(coeffs);
        if (antilimit::square_free_part(p).degree() != p.degree())
            continue;
        check_roots(p);
    }
}
