#pragma once

// Self-check suites: reference-table reproduction, closed-form oracle sweep,
// Hardy's axioms on random combinations, functional-equation residuals.

#include <antilimit/antilimit_solver.hpp>
#include <antilimit/error.hpp>
#include <antilimit/oracle.hpp>
#include <antilimit/pe_engine.hpp>
#include <antilimit/reference_tables.hpp>

#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace antilimit {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    std::size_t total() const { return passed + failures.size(); }
    bool ok() const { return failures.empty(); }

    void record(bool ok, std::string what) {
        if (ok)
            ++passed;
        else
            failures.push_back(std::move(what));
    }
};

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    std::size_t hardy_cases = 25;
    int functional_precision = 40;
    /// Residual bound for the functional-equation suite.
    int functional_digits = 30;
};

namespace detail {

/// Runs `check` as a separate job for every element, recording in order.
template <class T, class F>
void run_parallel(SuiteResult& out, const std::vector<T>& items, F check) {
    std::vector<std::future<std::pair<bool, std::string>>> jobs;
    for (const auto& item : items)
        jobs.push_back(std::async(std::launch::async, [=] {
            try {
                return check(item);
            } catch (const std::exception& e) {
                return std::pair<bool, std::string>{false, e.what()};
            }
        }));
    for (auto& j : jobs) {
        auto [ok, what] = j.get();
        out.record(ok, std::move(what));
    }
}

inline std::string label(Family f, long s) { return std::string(to_string(f)) + "(" + std::to_string(s) + ")"; }

} // namespace detail

/// Every reference row: p_odd as printed (with the known misprint replaced by
/// its derived coefficient), p_even = -[p_odd - k], value, and the
/// structural property checks for s = -1..-10.
inline SuiteResult verify_tables() {
    SuiteResult out{"tables", 0, {}};
    std::vector<reference::TableRow> rows = reference::eta_rows();
    for (const auto& r : reference::beta_rows())
        rows.push_back(r);
    detail::run_parallel(out, rows, [](const reference::TableRow& row) {
        const std::string name = detail::label(row.family, row.s);
        auto pair = characterize(SeriesSpec::dirichlet(row.family, row.s));
        Polynomial expected = row.p_odd();
        if (auto m = reference::misprint_for(row.family, row.s)) {
            if (expected.coeff(m->power) != Rational::parse(m->printed))
                return std::pair{false, name + ": misprint entry does not match the transcription"};
            expected += Polynomial::monomial(Rational::parse(m->derived) - Rational::parse(m->printed), m->power);
        }
        if (pair.p_odd != expected)
            return std::pair{false, name + ": p_odd " + to_string(pair.p_odd) + " != " + to_string(expected)};
        if (row.relation_k) {
            const Rational k = Rational::parse(*row.relation_k);
            if (pair.p_even != Polynomial::constant(k) - pair.p_odd)
                return std::pair{false, name + ": p_even is not -[p_odd - " + k.to_string() + "]"};
        }
        const Rational value = exact_value(SeriesSpec::dirichlet(row.family, row.s));
        if (value != Rational::parse(row.value))
            return std::pair{false, name + ": value " + value.to_string() + " != " + row.value};
        if (row.s >= -10) {
            auto rep = table_properties(pair, row.family, row.s);
            for (const auto& c : rep.checks)
                if (!c.passed)
                    return std::pair{false, name + ": property '" + c.name + "' failed " + c.detail};
        }
        return std::pair{true, std::string()};
    });
    return out;
}

/// Extrapolated value against the Bernoulli/Euler closed forms.
inline SuiteResult verify_oracle(long lowest = -30) {
    SuiteResult out{"oracle", 0, {}};
    std::vector<std::pair<Family, long>> cases;
    for (long s = -1; s >= lowest; --s) {
        cases.emplace_back(Family::eta, s);
        cases.emplace_back(Family::beta, s);
    }
    detail::run_parallel(out, cases, [](const std::pair<Family, long>& c) {
        const Rational got = exact_value(SeriesSpec::dirichlet(c.first, c.second));
        const Rational want = oracle::closed_form(c.first, c.second);
        return std::pair{got == want,
                         detail::label(c.first, c.second) + ": " + got.to_string() + " != " + want.to_string()};
    });
    return out;
}

/// Small random nonzero rational p/q with |p| <= 9, 1 <= q <= 6.
inline Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 6), sign(0, 1);
    return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

inline SeriesSpec random_dirichlet(std::mt19937_64& rng, long deepest = -8) {
    std::uniform_int_distribution<long> s(deepest, -1), fam(0, 1);
    return SeriesSpec::dirichlet(fam(rng) ? Family::beta : Family::eta, s(rng));
}

/// Axioms (A) scaling, (B) termwise sums, (C) prepending a term, each on
/// `cases` random instances, plus the fixed beta(-2) + eta(-3) case.
inline SuiteResult verify_hardy(const VerifyOptions& opts = {}) {
    SuiteResult out{"hardy", 0, {}};
    std::mt19937_64 rng(opts.seed);
    struct Case {
        char axiom;
        SeriesSpec combined;
        std::function<Rational()> expected;
    };
    std::vector<Case> cases;
    for (std::size_t i = 0; i < opts.hardy_cases; ++i) {
        Rational mu = random_small_rational(rng);
        SeriesSpec a = random_dirichlet(rng);
        cases.push_back({'A', SeriesSpec::scaled(mu, a), [=] { return mu * exact_value(a); }});
    }
    for (std::size_t i = 0; i < opts.hardy_cases; ++i) {
        SeriesSpec a = random_dirichlet(rng), b = random_dirichlet(rng);
        cases.push_back({'B', SeriesSpec::sum(a, b), [=] { return exact_value(a) + exact_value(b); }});
    }
    for (std::size_t i = 0; i < opts.hardy_cases; ++i) {
        Rational nu = random_small_rational(rng);
        SeriesSpec a = random_dirichlet(rng);
        cases.push_back({'C', SeriesSpec::prepended(nu, a), [=] { return nu + exact_value(a); }});
    }
    detail::run_parallel(out, cases, [](const Case& c) {
        const Rational got = exact_value(c.combined);
        const Rational want = c.expected();
        return std::pair{got == want, std::string("axiom ") + c.axiom + " " + to_string(c.combined) + ": " +
                                          got.to_string() + " != " + want.to_string()};
    });

    const auto mixed = SeriesSpec::sum(SeriesSpec::beta(-2), SeriesSpec::eta(-3));
    auto pair = characterize(mixed);
    const Polynomial want_odd(std::vector<Rational>{Rational(-5, 4), Rational(0), Rational(11, 4), Rational(1, 2)});
    out.record(pair.p_odd == want_odd, "beta(-2)+eta(-3): p_odd " + to_string(pair.p_odd));
    const Rational v = exact_value(mixed);
    out.record(v == Rational(-5, 8), "beta(-2)+eta(-3): value " + v.to_string());
    return out;
}

/// Functional-equation residuals, using the extrapolated value on the left
/// and a certified convergent sum on the right.
inline SuiteResult verify_functional(const VerifyOptions& opts = {}) {
    SuiteResult out{"functional", 0, {}};
    const std::vector<std::pair<Family, long>> cases{{Family::eta, -19}, {Family::eta, -17}, {Family::eta, -15},
                                                     {Family::eta, -20}, {Family::beta, -20}, {Family::beta, -18},
                                                     {Family::beta, -16}, {Family::beta, -19}};
    const int precision = opts.functional_precision;
    const Rational bound(BigInt(1), pow10(opts.functional_digits));
    detail::run_parallel(out, cases, [=](const std::pair<Family, long>& c) {
        const Rational value = exact_value(SeriesSpec::dirichlet(c.first, c.second));
        auto fc = oracle::functional_check(c.first, c.second, value, precision);
        const bool ok = fc.residual.to_rational() < bound;
        return std::pair{ok, detail::label(c.first, c.second) + ": residual " + fc.residual.to_fixed()};
    });
    return out;
}

inline std::vector<SuiteResult> run_suites(std::string_view suite, const VerifyOptions& opts = {}) {
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    if (!all && suite != "tables" && suite != "oracle" && suite != "hardy" && suite != "functional")
        throw parse_error("unknown suite '" + std::string(suite) + "' (expected tables, oracle, hardy, functional or all)");
    if (all || suite == "tables")
        out.push_back(verify_tables());
    if (all || suite == "oracle")
        out.push_back(verify_oracle());
    if (all || suite == "hardy")
        out.push_back(verify_hardy(opts));
    if (all || suite == "functional")
        out.push_back(verify_functional(opts));
    return out;
}

} // namespace antilimit
