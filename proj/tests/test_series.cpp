#include <antilimit/series.hpp>

#include <catch_amalgamated.hpp>

#include "support/independent.hpp"

#include <random>

using antilimit::Family;
using antilimit::Rational;
using antilimit::SeriesClass;
using antilimit::SeriesSpec;

namespace {

std::vector<Rational> sums(const SeriesSpec& s, std::size_t m) { return antilimit::partial_sums(s, m).values; }

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

SeriesSpec random_spec(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 0);
    std::uniform_int_distribution<long> s(-6, -1), n(-5, 5), d(1, 4), fam(0, 1);
    switch (kind(rng)) {
    case 1: return SeriesSpec::scaled(Rational(n(rng), d(rng)), random_spec(rng, depth - 1));
    case 2: return SeriesSpec::sum(random_spec(rng, depth - 1), random_spec(rng, depth - 1));
    case 3: return SeriesSpec::prepended(Rational(n(rng), d(rng)), random_spec(rng, depth - 1));
    default: return SeriesSpec::dirichlet(fam(rng) ? Family::beta : Family::eta, s(rng));
    }
}

} // namespace

TEST_CASE("terms of basic and combined series", "[series]") {
    CHECK(antilimit::term(SeriesSpec::eta(-1), 4) == Rational(-4));
    CHECK(antilimit::term(SeriesSpec::scaled(Rational(1), SeriesSpec::beta(-1)), 1) == Rational(1));
    auto mix = SeriesSpec::sum(SeriesSpec::eta(-1), SeriesSpec::zeta(0));
    std::vector<Rational> t;
    for (std::size_t n = 1; n <= 4; ++n)
        t.push_back(antilimit::term(mix, n));
    CHECK(t == ints({2, -1, 4, -3}));
    CHECK(antilimit::term(SeriesSpec::eta(2), 3) == Rational(1, 9));
    CHECK_THROWS_AS(antilimit::term(SeriesSpec::eta(-1), 0), antilimit::domain_error);
}

TEST_CASE("explicit series run out of terms", "[series]") {
    auto e = SeriesSpec::explicit_terms(ints({1, -2, 3}));
    CHECK(antilimit::term(e, 3) == Rational(3));
    CHECK_THROWS_AS(antilimit::term(e, 4), antilimit::out_of_terms);
    CHECK_THROWS_AS(antilimit::partial_sums(e, 4), antilimit::out_of_terms);
}

TEST_CASE("partial sums", "[series]") {
    CHECK(sums(SeriesSpec::eta(-1), 4) == ints({1, -1, 2, -2}));
    CHECK(sums(SeriesSpec::beta(-2), 3) == ints({1, -8, 17}));
    CHECK(sums(SeriesSpec::sum(SeriesSpec::beta(-2), SeriesSpec::eta(-3)), 3) == ints({2, -15, 37}));
    for (long s = -1; s >= -12; --s) {
        CHECK(sums(SeriesSpec::eta(s), 25) == indep::brute_partial_sums(Family::eta, s, 25));
        CHECK(sums(SeriesSpec::beta(s), 25) == indep::brute_partial_sums(Family::beta, s, 25));
    }
}

TEST_CASE("split by index parity", "[series]") {
    auto b = antilimit::split(antilimit::partial_sums(SeriesSpec::eta(-1), 6));
    REQUIRE(b.odd.size() == 3);
    REQUIRE(b.even.size() == 3);
    CHECK(b.odd[0].x == Rational(1));
    CHECK(b.odd[2].x == Rational(5));
    CHECK(b.odd[2].y == Rational(3));
    CHECK(b.even[0].x == Rational(2));
    CHECK(b.even[2].y == Rational(-3));

    auto one = antilimit::split(antilimit::partial_sums(SeriesSpec::eta(-1), 1));
    CHECK(one.odd.size() == 1);
    CHECK(one.even.empty());

    auto beta = antilimit::split(antilimit::partial_sums(SeriesSpec::beta(-2), 6));
    CHECK(beta.odd[1].y == Rational(17));
    CHECK(beta.odd[2].y == Rational(49));
    CHECK(beta.even[1].y == Rational(-32));
    CHECK(beta.even[2].y == Rational(-72));
}

TEST_CASE("classification", "[series]") {
    CHECK(antilimit::classify(SeriesSpec::eta(-3)) == SeriesClass::alternating_divergent);
    CHECK(antilimit::classify(SeriesSpec::eta(2)) == SeriesClass::alternating_convergent);
    CHECK(antilimit::classify(SeriesSpec::zeta(0)) == SeriesClass::monotone_divergent);
    CHECK(antilimit::classify(SeriesSpec::eta(0)) == SeriesClass::indeterminate);
    CHECK(antilimit::classify(SeriesSpec::sum(SeriesSpec::eta(-1), SeriesSpec::zeta(0))) ==
          SeriesClass::alternating_divergent);
    CHECK(antilimit::classify(SeriesSpec::prepended(Rational(7), SeriesSpec::eta(-2))) ==
          SeriesClass::alternating_divergent);
    CHECK_THROWS_AS(antilimit::classify(SeriesSpec::eta(-1), 3), antilimit::domain_error);
}

TEST_CASE("eta and beta at negative integers classify as alternating divergent for every window",
          "[series][property]") {
    for (long s = -1; s >= -20; --s)
        for (std::size_t w : {4u, 5u, 9u, 16u, 40u}) {
            REQUIRE(antilimit::classify(SeriesSpec::eta(s), w) == SeriesClass::alternating_divergent);
            REQUIRE(antilimit::classify(SeriesSpec::beta(s), w) == SeriesClass::alternating_divergent);
        }
}

TEST_CASE("partial sums are linear and shift under prepending", "[series][property]") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> n(-7, 7), d(1, 5);
    const std::size_t M = 20;
    for (int trial = 0; trial < 40; ++trial) {
        SeriesSpec a = random_spec(rng, 2), b = random_spec(rng, 2);
        const Rational mu(n(rng), d(rng)), nu(n(rng), d(rng));
        auto sa = sums(a, M), sb = sums(b, M);
        auto ssum = sums(SeriesSpec::sum(a, b), M);
        auto sscaled = sums(SeriesSpec::scaled(mu, a), M);
        auto spre = sums(SeriesSpec::prepended(nu, a), M);
        REQUIRE(spre[0] == nu);
        for (std::size_t i = 0; i < M; ++i) {
            REQUIRE(ssum[i] == sa[i] + sb[i]);
            REQUIRE(sscaled[i] == mu * sa[i]);
            if (i >= 1)
                REQUIRE(spre[i] == nu + sa[i - 1]);
        }
    }
}

TEST_CASE("text form parses back to the same series", "[series][grammar]") {
    for (const char* text : {"eta(-3)", "beta(-2)+eta(-3)", "3/2*eta(-1)", "prepend(1,eta(0))",
                             "explicit[1,-2,10,-10,26,-26]", "-1/3*(eta(-1)+beta(-4))", "zeta(0)+eta(-1)+beta(-2)"}) {
        auto spec = antilimit::parse_series(text);
        auto again = antilimit::parse_series(antilimit::to_string(spec));
        CHECK(again == spec);
        CHECK(antilimit::to_string(again) == antilimit::to_string(spec));
    }
    CHECK(antilimit::parse_series(" 3/2 * eta( -1 ) ") ==
          SeriesSpec::scaled(Rational(3, 2), SeriesSpec::eta(-1)));
    CHECK(antilimit::parse_series("prepend(1, eta(0))") == SeriesSpec::prepended(Rational(1), SeriesSpec::eta(0)));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto spec = random_spec(rng, 3);
        REQUIRE(antilimit::parse_series(antilimit::to_string(spec)) == spec);
    }
}

TEST_CASE("malformed series text", "[series][grammar]") {
    for (const char* bad : {"", "eta", "eta(-1", "eta(1/2)", "gamma(-1)", "eta(-1)+", "explicit[]", "3/*eta(-1)",
                            "eta(-1) beta(-2)", "prepend(1)", "explicit[1,2"}) {
        INFO(bad);
        CHECK_THROWS_AS(antilimit::parse_series(bad), antilimit::parse_error);
    }
}
