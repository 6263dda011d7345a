#include <antilimit/antilimit_solver.hpp>
#include <antilimit/oracle.hpp>

#include <catch_amalgamated.hpp>

#include "support/independent.hpp"

using antilimit::AntiLimit;
using antilimit::CharacterizeOptions;
using antilimit::Family;
using antilimit::HPReal;
using antilimit::Polynomial;
using antilimit::Rational;
using antilimit::SeriesSpec;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

SeriesSpec from_branches(const Polynomial& po, const Polynomial& pe, std::size_t count) {
    return SeriesSpec::explicit_terms(indep::terms_from_branches(po, pe, count));
}

antilimit::CharacteristicPair forced(const SeriesSpec& s) {
    CharacterizeOptions o;
    o.override_classification = true;
    return antilimit::characterize(s, o);
}

} // namespace

TEST_CASE("eta(-1) meets at -1/2 with value 1/4", "[solver]") {
    auto al = antilimit::assign_value(SeriesSpec::eta(-1));
    REQUIRE(al.value);
    CHECK(*al.value == R(1, 4));
    CHECK(al.rational_roots == std::vector<Rational>{R(-1, 2)});
    CHECK(al.real_roots.empty());
    CHECK(al.complex_roots.empty());
    CHECK(std::get<Rational>(*al.first_intersection) == R(-1, 2));
}

TEST_CASE("beta(-1) meets at 0 with value 0", "[solver]") {
    auto al = antilimit::assign_value(SeriesSpec::beta(-1));
    CHECK(*al.value == R(0));
    CHECK(al.rational_roots == std::vector<Rational>{R(0)});
}

TEST_CASE("complex anti-limits", "[solver][complex]") {
    // p_odd = x^2, p_even = -1: 1, -2, 10, -10, 26, -26, ...
    auto s1 = from_branches(Polynomial({R(0), R(0), R(1)}), Polynomial::constant(R(-1)), 24);
    auto t = indep::terms_from_branches(Polynomial({R(0), R(0), R(1)}), Polynomial::constant(R(-1)), 6);
    CHECK(t == std::vector<Rational>{R(1), R(-2), R(10), R(-10), R(26), R(-26)});
    auto al = antilimit::intersect(forced(s1));
    REQUIRE(al.value);
    CHECK(*al.value == R(-1));
    CHECK(al.real_root_count() == 0);
    CHECK_FALSE(al.first_intersection.has_value());
    REQUIRE(al.complex_roots.size() == 2);
    CHECK(al.complex_roots[0].re().is_zero());
    CHECK(al.complex_roots[0].im() == HPReal::from_rational(R(1), 50));
    CHECK(al.complex_roots[1].im() == HPReal::from_rational(R(-1), 50));
    CHECK(al.max_residual < antilimit::ten_to_minus(45, 60));
}

TEST_CASE("complex roots of higher degree are polished and paired", "[solver][complex]") {
    // p_odd - p_even = (x^2 + 1)(x^2 + 2x + 5) with p_even constant
    const Polynomial d = Polynomial({R(1), R(0), R(1)}) * Polynomial({R(5), R(2), R(1)});
    const Polynomial pe = Polynomial::constant(R(3));
    const Polynomial po = d + pe;
    auto al = antilimit::intersect(forced(from_branches(po, pe, 40)));
    REQUIRE(al.value);
    CHECK(*al.value == R(3));
    REQUIRE(al.complex_roots.size() == 4);
    // descending real part, then descending imaginary part
    CHECK(al.complex_roots[0].re().is_zero());
    CHECK(al.complex_roots[0].im() == HPReal::from_rational(R(1), 50));
    CHECK(al.complex_roots[1].im() == HPReal::from_rational(R(-1), 50));
    CHECK(al.complex_roots[2].re() == HPReal::from_rational(R(-1), 50));
    CHECK(al.complex_roots[2].im() == HPReal::from_rational(R(2), 50));
    CHECK(al.complex_roots[3].im() == HPReal::from_rational(R(-2), 50));
}

TEST_CASE("constant difference has no intersection", "[solver]") {
    CharacterizeOptions o;
    o.override_classification = true;
    auto grandi = antilimit::characterize(SeriesSpec::eta(0), o);
    CHECK_THROWS_AS(antilimit::intersect(grandi), antilimit::no_intersection);
    CHECK_THROWS_AS(antilimit::intersect(grandi, 20), antilimit::domain_error);
}

TEST_CASE("branches that meet at different heights are inconsistent", "[solver]") {
    // difference (x - 1)(x - 2), p_odd = x: values 1 and 2
    const Polynomial pe = Polynomial({R(-2), R(4), R(-1)});
    const Polynomial po = Polynomial({R(0), R(1)});
    auto pair = forced(from_branches(po, pe, 30));
    CHECK_THROWS_AS(antilimit::intersect(pair), antilimit::inconsistent_value);
}

TEST_CASE("common intersection points", "[solver]") {
    for (long s = -1; s >= -10; --s)
        for (Family f : {Family::eta, Family::beta}) {
            INFO(antilimit::to_string(f) << "(" << s << ")");
            CHECK(antilimit::common_point_check(antilimit::characterize(SeriesSpec::dirichlet(f, s)), f, s));
        }
    auto e5 = antilimit::characterize(SeriesSpec::eta(-5));
    CHECK(e5.p_odd(R(-1, 2)) == R(1, 4));
    // a pair built to miss the prescribed point
    auto shifted = antilimit::characterize(SeriesSpec::eta(-4));
    shifted.p_odd = shifted.p_odd + Polynomial::constant(R(1));
    CHECK_FALSE(antilimit::common_point_check(shifted, Family::eta, -4));
}

TEST_CASE("same value at every root and root location laws", "[solver][property]") {
    for (long s = -1; s >= -10; --s)
        for (Family f : {Family::eta, Family::beta}) {
            INFO(antilimit::to_string(f) << "(" << s << ")");
            auto pair = antilimit::characterize(SeriesSpec::dirichlet(f, s));
            REQUIRE(pair.structural_k);
            const Polynomial d = pair.p_odd - pair.p_even;
            CHECK(d + Polynomial::constant(*pair.structural_k) == pair.p_odd * R(2));

            auto al = antilimit::intersect(pair);
            for (const auto& r : al.rational_roots)
                CHECK(pair.p_odd(r) == *al.value);
            CHECK(al.max_residual < antilimit::ten_to_minus(45, 60));

            // no real root beyond 2
            antilimit::SturmSequence sturm(antilimit::square_free_part(d));
            CHECK(sturm.count_above(R(2)) == 0);
            if (f == Family::eta && s < -1)
                CHECK(al.real_root_count() >= 2);
        }
}

TEST_CASE("roots are sorted and the first intersection is the largest real root", "[solver]") {
    auto al = antilimit::assign_value(SeriesSpec::eta(-9));
    CHECK(*al.value == R(31, 4));
    CHECK(al.real_root_count() == 5);
    REQUIRE(al.first_intersection);
    const Rational first = antilimit::real_root_midpoint(*al.first_intersection);
    for (const auto& r : al.rational_roots)
        CHECK(r <= first);
    for (std::size_t i = 1; i < al.real_roots.size(); ++i)
        CHECK(al.real_roots[i].hi <= al.real_roots[i - 1].lo);
}

TEST_CASE("deduce one summand from a combination", "[solver][deduce]") {
    CHECK(antilimit::deduce(SeriesSpec::sum(SeriesSpec::eta(-1), SeriesSpec::eta(0)), SeriesSpec::eta(-1), R(1, 4)) ==
          R(1, 2));
    CHECK(antilimit::deduce(SeriesSpec::sum(SeriesSpec::eta(-1), SeriesSpec::zeta(0)), SeriesSpec::eta(-1),
                            R(1, 4)) == R(-1, 2));
    CHECK(antilimit::deduce(SeriesSpec::sum(SeriesSpec::beta(0), SeriesSpec::beta(-1)), SeriesSpec::beta(-1), R(0)) ==
          R(1, 2));
    const auto a = SeriesSpec::eta(-5);
    const Rational v = antilimit::exact_value(a);
    CHECK(antilimit::deduce(SeriesSpec::sum(a, a), a, v) == v);
    CHECK_THROWS_AS(antilimit::deduce(SeriesSpec::sum(SeriesSpec::eta(-1), SeriesSpec::eta(0)), SeriesSpec::eta(-2),
                                      R(0)),
                    antilimit::spec_mismatch);
    CHECK_THROWS_AS(antilimit::deduce(SeriesSpec::eta(-1), SeriesSpec::eta(-1), R(0)), antilimit::spec_mismatch);
}

TEST_CASE("values match the closed forms beyond the printed range", "[solver][oracle]") {
    for (long s = -1; s >= -24; --s) {
        CHECK(antilimit::exact_value(SeriesSpec::eta(s)) == indep::eta_reference(s));
        CHECK(antilimit::exact_value(SeriesSpec::beta(s)) == indep::beta_reference(s));
    }
}
