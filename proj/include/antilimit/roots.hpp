#pragma once

// Root machinery for the intersection polynomial: Sturm-certified real root
// isolation with exact rational recovery, and Aberth iteration for the
// remaining complex roots.

#include <antilimit/error.hpp>
#include <antilimit/high_precision.hpp>
#include <antilimit/polynomial.hpp>
#include <antilimit/rational.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace antilimit {

/// p scaled by a positive rational to coprime integer coefficients; signs of
/// values are preserved.
class IntegerForm {
public:
    explicit IntegerForm(const Polynomial& p) {
        BigInt l(1);
        for (const auto& v : p.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        BigInt g(0);
        for (const auto& v : p.coeffs()) {
            BigInt n = v.num() * (l / v.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            c_.push_back(std::move(n));
        }
        if (g > 1)
            for (auto& v : c_)
                v /= g;
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    /// sign(p(x)), via q^n p(num/q) in integers.
    int sign_at(const Rational& x) const {
        if (c_.empty())
            return 0;
        const BigInt num = x.num(), den = x.den();
        BigInt acc = c_.back();
        BigInt dpow(1);
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            dpow *= den;
            acc = acc * num + c_[i] * dpow;
        }
        return sgn(acc);
    }

private:
    std::vector<BigInt> c_;
};

/// Signed remainder chain of a square-free polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p) {
        if (p.is_zero())
            throw domain_error("Sturm sequence of the zero polynomial");
        chain_.push_back(p);
        if (!p.is_constant()) {
            chain_.push_back(derivative(p));
            while (!chain_.back().is_constant()) {
                auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
                if (r.is_zero())
                    break;
                chain_.push_back(-r);
            }
        }
        for (const auto& q : chain_)
            ints_.emplace_back(q);
    }

    const std::vector<Polynomial>& chain() const { return chain_; }

    /// Sign changes at x, zeros skipped.
    std::size_t variations(const Rational& x) const {
        std::size_t v = 0;
        int last = 0;
        for (const auto& q : ints_) {
            int s = q.sign_at(x);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++v;
            last = s;
        }
        return v;
    }

    /// Sign changes at +infinity (or -infinity).
    std::size_t variations_at_infinity(bool positive) const {
        std::size_t v = 0;
        int last = 0;
        for (const auto& q : chain_) {
            int s = q.leading().sign();
            if (!positive && q.degree().value_or(0) % 2 == 1)
                s = -s;
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++v;
            last = s;
        }
        return v;
    }

    /// Distinct real roots in (a, b].
    std::size_t count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
    std::size_t count_above(const Rational& a) const { return variations(a) - variations_at_infinity(true); }
    std::size_t count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

private:
    std::vector<Polynomial> chain_;
    std::vector<IntegerForm> ints_;
};

/// Strict bound: every root satisfies |x| < cauchy_bound(p).
inline Rational cauchy_bound(const Polynomial& p) {
    Rational m(0);
    const Rational lead = abs(p.leading());
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        m = std::max(m, abs(c[i]) / lead);
    return m + Rational(1);
}

namespace detail {

inline double log_abs(const BigInt& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

inline double log_abs(const Rational& v) { return log_abs(v.num()) - log_abs(v.den()); }

} // namespace detail

/// Fujiwara bound rounded up to an integer: every root has |x| <= result.
inline Rational root_radius(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1)
        return Rational(1);
    const std::size_t n = c.size() - 1;
    const double lead = detail::log_abs(c.back());
    double best = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].is_zero())
            continue;
        double l = detail::log_abs(c[i]) - lead - (i == 0 ? std::log(2.0) : 0.0);
        best = std::max(best, l / static_cast<double>(n - i));
    }
    double r = 2.0 * std::exp(best) * (1.0 + 1e-9) + 1.0;
    return Rational(BigInt(std::ceil(r)));
}

struct IsolatingInterval {
    Rational lo;
    Rational hi;
};

struct RealRoots {
    std::vector<Rational> rational;             // ascending
    std::vector<IsolatingInterval> irrational;  // ascending, each holds one root
};

namespace detail {

/// A point in (lo, hi) where p does not vanish, close to the midpoint.
inline Rational nonroot_split(const IntegerForm& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / Rational(2);
    Rational step = (hi - lo) / Rational(7);
    for (long k = 1; p.sign_at(mid) == 0; ++k)
        mid = (lo + hi) / Rational(2) + step / Rational(k + 1);
    return mid;
}

inline void isolate(const IntegerForm& p, const SturmSequence& sturm, const Rational& lo,
                    const Rational& hi, std::size_t count, std::vector<IsolatingInterval>& out) {
    if (count == 0)
        return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = nonroot_split(p, lo, hi);
    std::size_t left = sturm.count(lo, mid);
    isolate(p, sturm, lo, mid, left, out);
    isolate(p, sturm, mid, hi, count - left, out);
}

/// Shrinks (lo, hi) around its single root until narrower than width.
/// Returns the root itself when a bisection point hits it exactly.
inline std::optional<Rational> refine(const IntegerForm& p, IsolatingInterval& iv, const Rational& width) {
    int slo = p.sign_at(iv.lo);
    while (iv.hi - iv.lo >= width) {
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        int sm = p.sign_at(mid);
        if (sm == 0)
            return mid;
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return std::nullopt;
}

} // namespace detail

/// Exact isolation of every distinct real root of p. Rational roots are
/// recovered exactly: with a the leading coefficient of the primitive
/// integer form, any rational root has denominator dividing a, so once an
/// interval is narrower than 1/a^2 it can hold at most one such rational and
/// that rational is the simplest one inside it.
inline RealRoots real_roots(const Polynomial& p, const Rational& irrational_width) {
    RealRoots out;
    if (p.is_constant())
        return out;
    const Polynomial sf = square_free_part(p);
    const SturmSequence sturm(sf);
    const IntegerForm sfi(sf);
    const Rational bound = cauchy_bound(sf);
    std::vector<IsolatingInterval> ivs;
    detail::isolate(sfi, sturm, -bound, bound, sturm.count(-bound, bound), ivs);

    const auto prim = primitive_integer_coeffs(sf);
    const BigInt a = abs(prim.back());
    const Rational rational_width(BigInt(1), a * a);

    for (auto iv : ivs) {
        if (auto hit = detail::refine(sfi, iv, rational_width)) {
            out.rational.push_back(*hit);
            continue;
        }
        Rational cand = simplest_between(iv.lo, iv.hi);
        if (sfi.sign_at(cand) == 0) {
            out.rational.push_back(cand);
            continue;
        }
        if (auto hit = detail::refine(sfi, iv, irrational_width)) {
            out.rational.push_back(*hit); // unreachable for irrational roots
            continue;
        }
        out.irrational.push_back(iv);
    }
    std::sort(out.rational.begin(), out.rational.end());
    std::sort(out.irrational.begin(), out.irrational.end(),
              [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return out;
}

/// Shrinks an isolating interval of sf's root below the given width.
inline IsolatingInterval narrow(const Polynomial& sf, IsolatingInterval iv, const Rational& width) {
    if (auto hit = detail::refine(IntegerForm(sf), iv, width))
        return {*hit, *hit};
    return iv;
}

// ---------------------------------------------------------------------------
// Complex roots

namespace detail {

inline HPComplex eval_with_derivative(const std::vector<HPComplex>& c, const HPComplex& z, HPComplex& deriv) {
    const int d = z.precision();
    HPComplex p(HPReal::zero(d), HPReal::zero(d));
    HPComplex dp = p;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    deriv = dp;
    return p;
}

inline std::vector<std::complex<long double>> aberth_float(const Polynomial& p) {
    using C = std::complex<long double>;
    const auto& c = p.coeffs();
    const std::size_t n = c.size() - 1;
    std::vector<C> a(c.size());
    const long double lead = mpq_class(c.back().raw()).get_d();
    for (std::size_t i = 0; i < c.size(); ++i)
        a[i] = C(static_cast<long double>(mpq_class(c[i].raw()).get_d()) / lead, 0);
    long double r = 0;
    for (std::size_t i = 0; i < n; ++i)
        r = std::max(r, std::pow(std::abs(a[i]), 1.0L / static_cast<long double>(n - i)));
    r = std::max(r, 0.5L);
    std::vector<C> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(r, 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                 static_cast<long double>(n) + 0.4L);
    for (int iter = 0; iter < 500; ++iter) {
        long double worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C pv(0), dv(0);
            for (std::size_t i = a.size(); i-- > 0;) {
                dv = dv * z[k] + pv;
                pv = pv * z[k] + a[i];
            }
            if (pv == C(0))
                continue;
            C ratio = pv / dv;
            C s(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k)
                    s += C(1) / (z[k] - z[j]);
            C w = ratio / (C(1) - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                continue;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < 1e-16L)
            break;
    }
    return z;
}

} // namespace detail

/// All complex roots of a square-free p with deg >= 1, to roughly `digits`
/// decimal places. Float Aberth seeds a high-precision Aberth polish.
inline std::vector<HPComplex> complex_roots_all(const Polynomial& p, int digits) {
    const std::size_t n = p.degree().value_or(0);
    if (n == 0)
        return {};
    const int work = digits + 20;
    Polynomial m = monic(p);
    std::vector<HPComplex> c;
    for (const auto& v : m.coeffs())
        c.emplace_back(HPReal::from_rational(v, work), HPReal::zero(work));

    std::vector<HPComplex> z;
    for (const auto& s : detail::aberth_float(m))
        z.emplace_back(HPReal::from_rational(Rational::from_mpq(mpq_class(static_cast<double>(s.real()))), work),
                       HPReal::from_rational(Rational::from_mpq(mpq_class(static_cast<double>(s.imag()))), work));

    const HPReal tol = ten_to_minus(digits + 5, work);
    const HPComplex one(HPReal(pow10(work), work), HPReal::zero(work));
    for (int iter = 0; iter < 200; ++iter) {
        HPReal worst = HPReal::zero(work);
        for (std::size_t k = 0; k < n; ++k) {
            HPComplex dv;
            HPComplex pv = detail::eval_with_derivative(c, z[k], dv);
            if (pv.re().is_zero() && pv.im().is_zero())
                continue;
            if (dv.re().is_zero() && dv.im().is_zero())
                continue;
            HPComplex ratio = pv / dv;
            HPComplex s(HPReal::zero(work), HPReal::zero(work));
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                HPComplex diff = z[k] - z[j];
                if (diff.re().is_zero() && diff.im().is_zero())
                    continue;
                s = s + one / diff;
            }
            HPComplex w = ratio / (one - ratio * s);
            z[k] = z[k] - w;
            HPReal mag = abs(w.re()) + abs(w.im());
            if (mag > worst)
                worst = mag;
        }
        if (worst < tol)
            break;
    }
    return z;
}

} // namespace antilimit
