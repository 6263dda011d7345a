#pragma once

// Intersection of the characteristic branches and the value assigned there.

#include <antilimit/error.hpp>
#include <antilimit/high_precision.hpp>
#include <antilimit/pe_engine.hpp>
#include <antilimit/polynomial.hpp>
#include <antilimit/roots.hpp>
#include <antilimit/series.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace antilimit {

inline constexpr int default_precision = 50;

/// Either an exact rational root or an interval holding one irrational root.
using RealRoot = std::variant<Rational, IsolatingInterval>;

struct AntiLimit {
    /// Exact value when one could be established algebraically.
    std::optional<Rational> value;
    /// Always present; equals `value` at `precision` digits when exact.
    HPComplex numeric_value;
    bool value_exact = false;

    std::vector<Rational> rational_roots;          // descending
    std::vector<IsolatingInterval> real_roots;     // irrational, descending
    std::vector<HPComplex> complex_roots;          // conjugate pairs, descending re then im
    std::optional<RealRoot> first_intersection;    // largest real root

    Polynomial difference;                         // p_odd - p_even
    int precision = default_precision;
    /// Largest |p_odd(X) - value| and |p_odd(X) - p_even(X)| over inexact roots.
    HPReal max_residual;

    std::size_t real_root_count() const { return rational_roots.size() + real_roots.size(); }
};

inline Rational real_root_midpoint(const RealRoot& r) {
    if (const auto* q = std::get_if<Rational>(&r))
        return *q;
    const auto& iv = std::get<IsolatingInterval>(r);
    return (iv.lo + iv.hi) / Rational(2);
}

namespace detail {

/// Bound on |p'| over |x| <= radius.
inline Rational derivative_bound(const Polynomial& p, const Rational& radius) {
    Rational acc;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 1;)
        acc = acc * radius + abs(c[i]) * Rational(static_cast<long>(i));
    return acc;
}

/// Decimal digits needed to absorb a magnitude (at least 1).
inline int magnitude_digits(const Rational& v) {
    BigInt n = v.num() / v.den() + 1;
    return static_cast<int>(n.get_str().size());
}

inline HPComplex complex_from_real(const HPReal& v) { return HPComplex(v, HPReal::zero(v.digits())); }

inline bool complex_less_desc(const HPComplex& a, const HPComplex& b) {
    if (a.re() != b.re())
        return a.re() > b.re();
    return a.im() > b.im();
}

} // namespace detail

/// Solves p_odd(X) = p_even(X) and reads off the assigned value.
///
/// Real roots are certified by Sturm isolation and rational ones are exact.
/// Non-real roots come from the closed quadratic formula or from Aberth
/// iteration on the square-free, rationally deflated remainder. The value is
/// exact when p_odd + p_even is a constant k (value k/2) or when p_odd
/// reduces to a constant modulo the square-free part of the difference; the
/// numeric value at every root must agree with it to within 10^(5-precision).
inline AntiLimit intersect(const CharacteristicPair& pair, int precision = default_precision) {
    if (precision < HPComplex::min_precision)
        throw domain_error("precision must be at least " + std::to_string(HPComplex::min_precision));
    AntiLimit out;
    out.precision = precision;
    out.difference = pair.p_odd - pair.p_even;
    const Polynomial& diff = out.difference;
    if (diff.is_zero())
        throw no_intersection("the branches coincide; no isolated intersection exists");
    if (diff.is_constant())
        throw no_intersection("p_odd - p_even is the nonzero constant " + diff.constant_term().to_string() +
                              "; the branches never meet (combine the series with a known one and use deduce)");

    const Polynomial sf = square_free_part(diff);
    const Rational radius = root_radius(sf);
    const int guard = detail::magnitude_digits(detail::derivative_bound(pair.p_odd, radius)) +
                      detail::magnitude_digits(detail::derivative_bound(sf, radius)) + 10;
    const int work = precision + guard;
    const Rational eps(BigInt(1), pow10(precision));

    RealRoots rr = real_roots(diff, eps);

    // Exact value where the algebra allows it.
    if (pair.structural_k) {
        out.value = *pair.structural_k / Rational(2);
    } else if (auto rem = divmod(pair.p_odd, sf).second; rem.is_constant()) {
        out.value = rem.constant_term();
    } else if (!rr.rational.empty()) {
        out.value = pair.p_odd(rr.rational.back());
    }
    out.value_exact = out.value.has_value();

    for (const auto& r : rr.rational) {
        if (pair.p_odd(r) != pair.p_even(r))
            throw inconsistent_value("rational root " + r.to_string() + " does not solve p_odd = p_even");
        if (out.value && pair.p_odd(r) != *out.value)
            throw inconsistent_value("branches meet at X = " + r.to_string() + " with value " +
                                     pair.p_odd(r).to_string() + ", not " + out.value->to_string());
    }

    // Remainder after removing rational roots: carries the irrational and
    // non-real roots, all simple.
    Polynomial rest = sf;
    for (const auto& r : rr.rational)
        rest = divmod(rest, Polynomial::linear_root(r)).first;
    const std::size_t rest_degree = rest.degree().value_or(0);
    const std::size_t nonreal = rest_degree - rr.irrational.size();

    std::vector<HPComplex> complex_work;
    if (nonreal > 0) {
        if (rest_degree == 2) {
            const Rational a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
            const Rational disc = b * b - Rational(4) * a * c; // negative here
            HPReal root = sqrt(HPReal::from_rational(-disc, work));
            HPReal re = HPReal::from_rational(-b / (Rational(2) * a), work);
            HPReal im = abs(root / HPReal::from_rational(Rational(2) * a, work));
            complex_work.emplace_back(re, im);
            complex_work.emplace_back(re, -im);
        } else {
            auto all = complex_roots_all(rest, work - 5);
            std::sort(all.begin(), all.end(),
                      [](const HPComplex& x, const HPComplex& y) { return abs(x.im()) > abs(y.im()); });
            all.resize(nonreal);
            for (const auto& z : all) {
                if (z.im().sign() > 0) {
                    complex_work.push_back(z);
                    complex_work.push_back(z.conj());
                }
            }
            if (complex_work.size() != nonreal)
                throw inconsistent_value("complex roots did not separate into conjugate pairs");
        }
        std::sort(complex_work.begin(), complex_work.end(), detail::complex_less_desc);
    }

    // Numeric value and residual checks.
    const HPReal tol = ten_to_minus(precision - 5, work);
    HPReal worst = HPReal::zero(work);
    std::optional<HPComplex> reference;
    if (out.value)
        reference = HPComplex::from_rational(*out.value, Rational(0), work);

    auto check = [&](const HPComplex& z, const std::string& where) {
        HPComplex po = poly_eval_complex(pair.p_odd, z);
        HPComplex pe = poly_eval_complex(pair.p_even, z);
        HPReal gap = (po - pe).abs();
        if (gap > worst)
            worst = gap;
        if (!reference)
            reference = po;
        HPReal dev = (po - *reference).abs();
        if (dev > worst)
            worst = dev;
        if (dev > tol || gap > tol)
            throw inconsistent_value("value at " + where + " deviates by " + dev.to_fixed(precision) +
                                     " (branch gap " + gap.to_fixed(precision) + ")");
    };

    std::vector<IsolatingInterval> irr_desc(rr.irrational.rbegin(), rr.irrational.rend());
    for (auto& iv : irr_desc) {
        // |p_odd(mid) - p_odd(X)| <= |p_odd'|_max * width must sit well below tol
        const Rational local = std::max(abs(iv.lo), abs(iv.hi));
        const Rational value_width = Rational(BigInt(1), pow10(precision + 10)) /
                                     (detail::derivative_bound(pair.p_odd, local) + Rational(1));
        IsolatingInterval tight = narrow(sf, iv, value_width);
        Rational mid = (tight.lo + tight.hi) / Rational(2);
        check(detail::complex_from_real(HPReal::from_rational(mid, work)), "X ~ " + mid.to_string());
    }
    for (const auto& z : complex_work)
        check(z, "X = " + z.to_string(precision));

    out.rational_roots.assign(rr.rational.rbegin(), rr.rational.rend());
    out.real_roots = std::move(irr_desc);
    for (const auto& z : complex_work)
        out.complex_roots.push_back(z.rescaled(precision));

    // Largest real root.
    if (!out.rational_roots.empty() && !out.real_roots.empty()) {
        if (out.rational_roots.front() > out.real_roots.front().lo)
            out.first_intersection = out.rational_roots.front();
        else
            out.first_intersection = out.real_roots.front();
    } else if (!out.rational_roots.empty()) {
        out.first_intersection = out.rational_roots.front();
    } else if (!out.real_roots.empty()) {
        out.first_intersection = out.real_roots.front();
    }

    if (out.value) {
        out.numeric_value = HPComplex::from_rational(*out.value, Rational(0), precision);
    } else if (out.first_intersection) {
        HPReal x = HPReal::from_rational(real_root_midpoint(*out.first_intersection), work);
        out.numeric_value = poly_eval_complex(pair.p_odd, detail::complex_from_real(x)).rescaled(precision);
    } else {
        out.numeric_value = reference->rescaled(precision);
    }
    out.max_residual = worst.rescaled(work);
    return out;
}

/// True when p_odd - p_even vanishes at the point(s) fixed by family and
/// parity: eta even s at 0 and -1, eta odd s at -1/2, beta odd s at 0,
/// beta even s at 1/2.
inline bool common_point_check(const CharacteristicPair& pair, Family family, long s) {
    const Polynomial diff = pair.p_odd - pair.p_even;
    const bool s_odd = (s % 2) != 0;
    if (family == Family::eta) {
        if (s_odd)
            return diff(Rational(-1, 2)).is_zero();
        return diff(Rational(0)).is_zero() && diff(Rational(-1)).is_zero();
    }
    if (family == Family::beta)
        return s_odd ? diff(Rational(0)).is_zero() : diff(Rational(1, 2)).is_zero();
    throw domain_error("common points are defined for eta and beta only");
}

struct SolveOptions {
    CharacterizeOptions characterize;
    int precision = default_precision;
};

/// characterize + intersect.
inline AntiLimit assign_value(const SeriesSpec& spec, const SolveOptions& opts = {}) {
    return intersect(characterize(spec, opts.characterize), opts.precision);
}

/// Exact value of a series that must be PE summable with an exact result.
inline Rational exact_value(const SeriesSpec& spec, const SolveOptions& opts = {}) {
    auto al = assign_value(spec, opts);
    if (!al.value)
        throw inconsistent_value("no exact value for " + to_string(spec));
    return *al.value;
}

/// value(a + b) - value(known) where known is one of the two summands.
inline Rational deduce(const SeriesSpec& combined, const SeriesSpec& known, const Rational& known_value,
                       const SolveOptions& opts = {}) {
    const auto* sum = combined.as<SeriesSpec::Sum>();
    if (!sum)
        throw spec_mismatch(to_string(combined) + " is not a sum of two series");
    if (!(*sum->left == known) && !(*sum->right == known))
        throw spec_mismatch(to_string(known) + " is not a summand of " + to_string(combined));
    return exact_value(combined, opts) - known_value;
}

} // namespace antilimit
