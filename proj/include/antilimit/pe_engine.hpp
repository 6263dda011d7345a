#pragma once

// Exact characteristic polynomials for the odd and even partial-sum branches.

#include <antilimit/error.hpp>
#include <antilimit/polynomial.hpp>
#include <antilimit/series.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antilimit {

struct FitOptions {
    std::size_t max_degree = 64;
    std::size_t verify_count = 3;

    void validate() const {
        if (max_degree < 1)
            throw domain_error("max_degree must be at least 1");
        if (verify_count < 1)
            throw domain_error("verify_count must be at least 1");
    }
};

struct FitResult {
    Polynomial poly;
    std::size_t degree = 0; // 0 also for the zero polynomial
};

namespace detail {

enum class FitStatus { found, need_more_points, exceeded_max_degree };

struct FitAttempt {
    FitStatus status;
    FitResult result;
    std::size_t degrees_tried = 0;
};

/// Minimal degree d such that the interpolant of the first d+1 points has a
/// vanishing next divided difference and reproduces the following
/// verify_count points exactly.
inline FitAttempt try_fit(std::span<const Point> pts, const FitOptions& opts) {
    const auto dd = divided_differences(pts);
    for (std::size_t d = 0; d <= opts.max_degree; ++d) {
        if (pts.size() < d + 1 + opts.verify_count)
            return {FitStatus::need_more_points, {}, d};
        if (!dd[d + 1].is_zero())
            continue;
        bool reproduces = true;
        for (std::size_t j = d + 1; j < d + 1 + opts.verify_count && reproduces; ++j)
            reproduces = newton_eval(dd, pts, d + 1, pts[j].x) == pts[j].y;
        if (reproduces)
            return {FitStatus::found, {newton_to_monomial(dd, pts, d + 1), d}, d + 1};
    }
    return {FitStatus::exceeded_max_degree, {}, opts.max_degree + 1};
}

} // namespace detail

/// Minimal-degree polynomial that stays unchanged when more points or a
/// higher degree are admitted. Throws not_polynomial when no degree up to
/// opts.max_degree qualifies and insufficient_terms when the points run out
/// before that is known.
inline FitResult fit_stable(std::span<const Point> points, const FitOptions& opts = {}) {
    opts.validate();
    auto attempt = detail::try_fit(points, opts);
    switch (attempt.status) {
    case detail::FitStatus::found:
        return attempt.result;
    case detail::FitStatus::exceeded_max_degree:
        throw not_polynomial("no polynomial of degree <= " + std::to_string(opts.max_degree) +
                             " reproduces the branch exactly");
    case detail::FitStatus::need_more_points:
        break;
    }
    throw insufficient_terms(std::to_string(points.size()) + " points certify no degree below " +
                             std::to_string(attempt.degrees_tried));
}

inline FitResult fit_stable(const std::vector<Point>& points, const FitOptions& opts = {}) {
    return fit_stable(std::span<const Point>(points), opts);
}

struct CharacteristicPair {
    Polynomial p_odd;
    Polynomial p_even;
    SeriesSpec spec;
    std::size_t fit_degree = 0;
    std::size_t points_used = 0;
    std::size_t verify_count = 0;
    /// p_odd + p_even when that sum is constant.
    std::optional<Rational> structural_k;
};

struct CharacterizeOptions {
    FitOptions fit;
    /// Skip the alternating-divergent precondition (explicit feeds, Grandi's series).
    bool override_classification = false;
    std::size_t classify_window = default_classify_window;
};

/// Fits both branches, requesting partial sums in growing batches up to
/// 2 * (max_degree + verify_count + 1) terms.
inline CharacteristicPair characterize(const SeriesSpec& spec, const CharacterizeOptions& opts = {}) {
    opts.fit.validate();
    if (!opts.override_classification) {
        auto cls = classify(spec, opts.classify_window);
        if (cls != SeriesClass::alternating_divergent)
            throw not_alternating_divergent("series " + to_string(spec) + " classifies as " +
                                            to_string(cls) + "; extrapolation needs an alternating divergent series");
    }

    const std::size_t cap = 2 * (opts.fit.max_degree + opts.fit.verify_count + 1);
    const auto avail = term_count(spec);
    std::size_t terms = 2 * (opts.fit.verify_count + 2);

    for (;;) {
        std::size_t m = std::min(terms, cap);
        if (avail)
            m = std::min(m, *avail);
        if (m == 0)
            throw insufficient_terms("series has no terms");
        auto branches = split(partial_sums(spec, m));
        auto odd = detail::try_fit(branches.odd, opts.fit);
        auto even = detail::try_fit(branches.even, opts.fit);

        using detail::FitStatus;
        if (odd.status == FitStatus::exceeded_max_degree || even.status == FitStatus::exceeded_max_degree)
            throw not_polynomial("no polynomial of degree <= " + std::to_string(opts.fit.max_degree) +
                                 " reproduces the " +
                                 (odd.status == FitStatus::exceeded_max_degree ? "odd" : "even") +
                                 " partial sums of " + to_string(spec));
        if (odd.status == FitStatus::found && even.status == FitStatus::found) {
            CharacteristicPair pair{odd.result.poly, even.result.poly, spec, 0, 0, opts.fit.verify_count, {}};
            pair.fit_degree = std::max(odd.result.degree, even.result.degree);
            pair.points_used = pair.fit_degree + 1;
            Polynomial k = pair.p_odd + pair.p_even;
            if (k.is_constant())
                pair.structural_k = k.constant_term();
            return pair;
        }
        const bool exhausted = m >= cap || (avail && m >= *avail);
        if (exhausted) {
            if (m >= cap)
                throw not_polynomial("no polynomial of degree <= " + std::to_string(opts.fit.max_degree) +
                                     " could be certified for " + to_string(spec) + " within " +
                                     std::to_string(cap) + " terms");
            throw insufficient_terms("the " + std::to_string(m) + " supplied terms of " + to_string(spec) +
                                     " do not certify a stable polynomial");
        }
        terms *= 2;
    }
}

// ---------------------------------------------------------------------------
// Structural properties of eta/beta characteristic polynomials

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PropertyReport {
    Family family = Family::eta;
    long s = 0;
    std::vector<PropertyCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

namespace detail {

/// Degrees carrying nonzero coefficients for |s| = n: eta uses n, n-1, n-3,
/// n-5, ...; beta uses n, n-2, n-4, ...
inline std::vector<bool> expected_support(Family family, long n) {
    std::vector<bool> sup(static_cast<std::size_t>(n) + 1, false);
    sup[static_cast<std::size_t>(n)] = true;
    long start = family == Family::eta ? n - 1 : n - 2;
    for (long d = start; d >= 0; d -= 2)
        sup[static_cast<std::size_t>(d)] = true;
    return sup;
}

} // namespace detail

inline PropertyReport table_properties(const CharacteristicPair& pair, Family family, long s) {
    if (family == Family::zeta || s > -1)
        throw domain_error("table properties apply to eta/beta with s <= -1");
    PropertyReport rep{family, s, {}};
    const long n = -s;
    const bool s_odd = n % 2 == 1;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const Polynomial& po = pair.p_odd;
    const Polynomial& pe = pair.p_even;

    add("degree equals |s|",
        po.degree() == static_cast<std::size_t>(n) && pe.degree() == static_cast<std::size_t>(n) &&
            pair.fit_degree == static_cast<std::size_t>(n),
        "fit degree " + std::to_string(pair.fit_degree));

    add("p_even has no constant term", pe.constant_term().is_zero(), pe.constant_term().to_string());

    const bool const_expected = family == Family::eta ? s_odd : !s_odd;
    add("p_odd constant term nonzero only for " +
            std::string(family == Family::eta ? "odd" : "even") + " s",
        po.constant_term().is_zero() != const_expected, po.constant_term().to_string());

    {
        auto sup = detail::expected_support(family, n);
        bool ok = po.coeffs().size() == sup.size();
        for (std::size_t i = 0; ok && i < sup.size(); ++i)
            ok = po.coeff(i).is_zero() != sup[i];
        add("alternating power structure", ok);
    }

    if (pair.structural_k) {
        add("p_even = -[p_odd - k]", pe == Polynomial::constant(*pair.structural_k) - po,
            "k = " + pair.structural_k->to_string());
    } else {
        add("p_even = -[p_odd - k]", false, "p_odd + p_even is not constant");
    }

    const Rational zero(0), minus_one(-1);
    if (family == Family::eta && !s_odd) {
        add("boundary p_odd(0) = p_even(0) = 0", po(zero).is_zero() && pe(zero).is_zero());
        add("boundary p_odd(-1) = p_even(-1) = 0", po(minus_one).is_zero() && pe(minus_one).is_zero());
    } else if (family == Family::eta) {
        add("boundary p_even(0) = 0", pe(zero).is_zero());
        add("boundary p_odd(-1) = 0", po(minus_one).is_zero());
    } else if (!s_odd) {
        add("boundary p_even(0) = 0", pe(zero).is_zero());
    } else {
        add("boundary p_even(0) = p_odd(0) = 0", pe(zero).is_zero() && po(zero).is_zero());
    }

    // Eta branches are symmetric about -1/2 once the assigned value is removed;
    // beta branches are symmetric about 0 as they stand.
    const Rational value = pair.structural_k ? *pair.structural_k / Rational(2) : Rational(0);
    const Rational center = family == Family::eta ? Rational(-1, 2) : Rational(0);
    const Rational offset = family == Family::eta ? value : Rational(0);
    const Parity want = family == Family::eta ? (s_odd ? Parity::odd : Parity::even)
                                              : (s_odd ? Parity::odd : Parity::even);
    const Parity got_odd = parity_about(po, center, offset);
    const Parity got_even = parity_about(pe, center, offset);
    add(std::string("parity about ") + center.to_string() + " is " + to_string(want),
        got_odd == want && got_even == want,
        std::string("p_odd ") + to_string(got_odd) + ", p_even " + to_string(got_even));
    return rep;
}

} // namespace antilimit
