#pragma once

// Independent closed forms and numeric cross-checks.
//
// Bernoulli numbers use the B_1 = +1/2 convention throughout, so that
//   eta(-n)  = (2^(n+1) - 1) B_(n+1) / (n+1)
//   zeta(-n) = -B_(n+1) / (n+1)
// hold for every n >= 0 including n = 0. beta(-n) = E_n / 2 with E_n the
// Euler (secant) numbers.

#include <antilimit/error.hpp>
#include <antilimit/high_precision.hpp>
#include <antilimit/rational.hpp>
#include <antilimit/series.hpp>

#include <cmath>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

namespace antilimit::oracle {

/// B_0, B_1, ... grown on demand. Thread-safe.
class BernoulliTable {
public:
    Rational operator()(std::size_t n) {
        std::lock_guard lock(mu_);
        extend(n);
        return b_[n];
    }

    std::vector<Rational> prefix(std::size_t count) {
        std::lock_guard lock(mu_);
        if (count > 0)
            extend(count - 1);
        return {b_.begin(), b_.begin() + static_cast<std::ptrdiff_t>(count)};
    }

    /// sum_{j=0}^{m} C(m+1, j) B_j = m + 1 for every cached m.
    bool recurrence_holds() const {
        std::lock_guard lock(mu_);
        for (std::size_t m = 0; m < b_.size(); ++m) {
            Rational acc;
            for (std::size_t j = 0; j <= m; ++j)
                acc += Rational(binomial(m + 1, j)) * b_[j];
            if (acc != Rational(static_cast<long>(m + 1)))
                return false;
        }
        return true;
    }

    std::size_t cached() const {
        std::lock_guard lock(mu_);
        return b_.size();
    }

private:
    void extend(std::size_t n) {
        while (b_.size() <= n) {
            const std::size_t m = b_.size();
            Rational acc;
            for (std::size_t j = 0; j < m; ++j)
                acc += Rational(binomial(m + 1, j)) * b_[j];
            b_.push_back((Rational(static_cast<long>(m + 1)) - acc) / Rational(static_cast<long>(m + 1)));
        }
    }

    mutable std::mutex mu_;
    std::vector<Rational> b_{Rational(1)};
};

/// E_0, E_1, ... (zero at odd indices) grown on demand. Thread-safe.
class EulerTable {
public:
    BigInt operator()(std::size_t n) {
        std::lock_guard lock(mu_);
        extend(n);
        return e_[n];
    }

    /// E_n = 0 for odd n and sum_{k=0}^{n} C(2n, 2k) E_2k = 0 for n >= 1.
    bool recurrence_holds() const {
        std::lock_guard lock(mu_);
        if (e_.empty() || e_[0] != 1)
            return false;
        for (std::size_t i = 1; i < e_.size(); i += 2)
            if (e_[i] != 0)
                return false;
        for (std::size_t n = 1; 2 * n < e_.size(); ++n) {
            BigInt acc(0);
            for (std::size_t k = 0; k <= n; ++k)
                acc += binomial(2 * n, 2 * k) * e_[2 * k];
            if (acc != 0)
                return false;
        }
        return true;
    }

    std::size_t cached() const {
        std::lock_guard lock(mu_);
        return e_.size();
    }

private:
    void extend(std::size_t n) {
        while (e_.size() <= n) {
            const std::size_t m = e_.size();
            if (m % 2 == 1) {
                e_.emplace_back(0);
                continue;
            }
            const std::size_t half = m / 2;
            BigInt acc(0);
            for (std::size_t k = 0; k < half; ++k)
                acc += binomial(m, 2 * k) * e_[2 * k];
            e_.push_back(-acc);
        }
    }

    mutable std::mutex mu_;
    std::vector<BigInt> e_{BigInt(1)};
};

inline BernoulliTable& bernoulli() {
    static BernoulliTable table;
    return table;
}

inline EulerTable& euler() {
    static EulerTable table;
    return table;
}

namespace detail {

inline std::size_t nonpositive_index(long s, const char* what) {
    if (s > 0)
        throw domain_error(std::string(what) + " closed form needs s <= 0, got " + std::to_string(s));
    return static_cast<std::size_t>(-s);
}

} // namespace detail

inline Rational eta_closed(long s) {
    const std::size_t n = detail::nonpositive_index(s, "eta");
    Rational factor(pow_int(2, n + 1) - 1);
    return factor * bernoulli()(n + 1) / Rational(static_cast<long>(n + 1));
}

inline Rational beta_closed(long s) {
    const std::size_t n = detail::nonpositive_index(s, "beta");
    return Rational(euler()(n)) / Rational(2);
}

inline Rational zeta_closed(long s) {
    const std::size_t n = detail::nonpositive_index(s, "zeta");
    return -bernoulli()(n + 1) / Rational(static_cast<long>(n + 1));
}

inline Rational closed_form(Family family, long s) {
    switch (family) {
    case Family::eta: return eta_closed(s);
    case Family::beta: return beta_closed(s);
    case Family::zeta: return zeta_closed(s);
    }
    throw domain_error("unknown family");
}

struct EtaValue {
    Rational value;
};
struct ZetaValue {
    Rational value;
};

/// 1 - 2^(1-s)
inline Rational eta_zeta_factor(long s) { return Rational(1) - pow(Rational(2), 1 - s); }

/// zeta(s) from a known eta(s).
inline Rational eta_zeta_convert(long s, const EtaValue& known) {
    if (s == 1)
        throw domain_error("eta/zeta conversion is singular at s = 1");
    return known.value / eta_zeta_factor(s);
}

/// eta(s) from a known zeta(s).
inline Rational eta_zeta_convert(long s, const ZetaValue& known) {
    if (s == 1)
        throw domain_error("eta/zeta conversion is singular at s = 1");
    return known.value * eta_zeta_factor(s);
}

// ---------------------------------------------------------------------------
// Convergent alternating sums

enum class SumMethod {
    /// Plain partial sums; truncation error bounded by the first omitted term.
    direct,
    /// Direct when it finishes within the term cap, otherwise the
    /// Cohen-Rodriguez Villegas-Zagier Chebyshev weighting.
    automatic,
};

inline constexpr std::size_t direct_term_cap = 1'000'000;

struct CertifiedSum {
    HPReal value;
    /// |true sum - value| <= error_bound.
    Rational error_bound;
    std::size_t terms = 0;
    bool accelerated = false;
};

namespace detail {

/// a_k = 1 / base(k)^s for k = 0, 1, ...; base(k) = k+1 (eta) or 2k+1 (beta).
inline BigInt alt_base(Family family, std::size_t k) {
    return family == Family::beta ? BigInt(static_cast<unsigned long>(2 * k + 1))
                                  : BigInt(static_cast<unsigned long>(k + 1));
}

inline BigInt ipow(const BigInt& b, long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

inline CertifiedSum direct_sum(Family family, long s, int precision, int work) {
    const Rational target(BigInt(1), 2 * pow10(precision));
    // terms needed: smallest N with 1/base(N)^s < target
    const double logn = (static_cast<double>(precision) * std::log(10.0) + std::log(2.0)) / static_cast<double>(s);
    const double need = std::exp(logn) / (family == Family::beta ? 2.0 : 1.0) + 2.0;
    if (!(need < static_cast<double>(direct_term_cap)))
        throw precision_unachievable("direct summation of " + std::string(to_string(family)) + "(" +
                                     std::to_string(s) + ") to " + std::to_string(precision) +
                                     " digits needs more than " + std::to_string(direct_term_cap) + " terms");
    const BigInt scale = pow10(work);
    BigInt acc(0);
    std::size_t k = 0;
    for (;; ++k) {
        BigInt den = ipow(alt_base(family, k), s);
        if (Rational(BigInt(1), den) < target)
            break;
        BigInt t = div_round(scale, den);
        acc += (k % 2 == 0) ? t : BigInt(-t);
    }
    const Rational first_omitted(BigInt(1), ipow(alt_base(family, k), s));
    const Rational rounding(BigInt(static_cast<unsigned long>(k + 1)), 2 * scale);
    return {HPReal(acc, work), first_omitted + rounding, k, false};
}

/// Chebyshev-weighted partial sum. For a_k = integral of t^k against a
/// positive measure (true for both families), the error is at most
/// a_0 / d_n with d_n = T_n(3).
inline CertifiedSum cvz_sum(Family family, long s, int precision, int work) {
    const Rational target(BigInt(1), 2 * pow10(precision));
    // d_n = T_n(3) grows like 5.828^n
    BigInt dprev(1), d(3);
    std::size_t n = 1;
    while (Rational(BigInt(1), d) >= target) {
        BigInt next = 6 * d - dprev;
        dprev = d;
        d = next;
        ++n;
    }
    const BigInt scale = pow10(work);
    Rational b(-1);
    Rational c(-d);
    BigInt acc(0);
    Rational weight_total;
    for (std::size_t k = 0; k < n; ++k) {
        c = b - c;
        BigInt ak = div_round(scale, ipow(alt_base(family, k), s));
        acc += div_round(c.num() * ak, c.den());
        weight_total += abs(c);
        const long kk = static_cast<long>(k), nn = static_cast<long>(n);
        b = b * Rational((kk + nn) * (kk - nn)) * Rational(2) / Rational((2 * kk + 1) * (kk + 1));
    }
    BigInt value = div_round(acc, d);
    const Rational truncation(BigInt(1), d);
    const Rational rounding = (weight_total / Rational(d) + Rational(1)) * Rational(BigInt(1), 2 * scale);
    return {HPReal(value, work), truncation + rounding, n, true};
}

} // namespace detail

/// Certified value of eta(s) or beta(s) for s >= 1, with error below
/// 10^-precision.
inline CertifiedSum convergent_sum(Family family, long s, int precision, SumMethod method = SumMethod::automatic) {
    if (family == Family::zeta)
        throw domain_error("zeta is not an alternating series");
    if (s < 1)
        throw domain_error("convergent sums need s >= 1");
    if (precision < 1)
        throw domain_error("precision must be positive");
    const int work = precision + 10 + 7; // 7 digits absorb the term-cap rounding
    if (method == SumMethod::direct)
        return detail::direct_sum(family, s, precision, work);
    try {
        return detail::direct_sum(family, s, precision, work);
    } catch (const precision_unachievable&) {
        return detail::cvz_sum(family, s, precision, work);
    }
}

inline CertifiedSum convergent_sum(const SeriesSpec& spec, int precision, SumMethod method = SumMethod::automatic) {
    const auto* d = spec.as<SeriesSpec::Dirichlet>();
    if (!d)
        throw domain_error("convergent sums are defined for eta(s) and beta(s) only");
    return convergent_sum(d->family, d->s, precision, method);
}

// ---------------------------------------------------------------------------
// Functional equations at integer arguments

/// sin(pi k / 2) for integer k.
inline int sin_half_pi(long k) {
    switch (((k % 4) + 4) % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
    }
}

struct FunctionalCheck {
    HPReal rhs;
    HPReal residual;
    /// Bound on the numeric error carried by rhs.
    Rational error_bound;
};

/// Evaluates the right-hand side of
///   eta(-s)  = 2s (1 - 2^-(1+s)) / ((1 - 2^-s) pi^(s+1)) sin(pi s/2) Gamma(s) eta(s+1)
///   beta(1-s) = (pi/2)^-s sin(pi s/2) Gamma(s) beta(s)
/// for the given negative argument and compares it with `value`.
inline FunctionalCheck functional_check(Family family, long s_negative, const Rational& value, int precision) {
    if (s_negative > -1)
        throw domain_error("functional check needs a negative integer argument");
    if (family == Family::zeta)
        throw domain_error("functional check covers eta and beta");

    long s = 0, pi_power = 0, sum_arg = 0;
    Rational factor;
    if (family == Family::eta) {
        s = -s_negative;
        pi_power = s + 1;
        sum_arg = s + 1;
        factor = Rational(2 * s) * (Rational(1) - pow(Rational(2), -(1 + s))) /
                 (Rational(1) - pow(Rational(2), -s)) * Rational(factorial(static_cast<unsigned long>(s - 1)));
    } else {
        s = 1 - s_negative;
        pi_power = s;
        sum_arg = s;
        factor = pow(Rational(2), s) * Rational(factorial(static_cast<unsigned long>(s - 1)));
    }
    factor *= Rational(sin_half_pi(s));

    const int out_digits = precision + 10;
    if (factor.is_zero()) {
        HPReal rhs = HPReal::zero(out_digits);
        return {rhs, abs(HPReal::from_rational(value, out_digits)), Rational(0)};
    }

    // |factor| / pi^power < |factor| / 3^power bounds the amplification.
    const Rational amplification = abs(factor) / pow(Rational(3), pi_power);
    const int mag = static_cast<int>(BigInt(amplification.num() / amplification.den() + 1).get_str().size());
    const int work = precision + mag + 15;
    if (work > pi_literal_digits)
        throw precision_unachievable("functional check at " + std::to_string(precision) + " digits needs " +
                                     std::to_string(work) + " digits of pi");

    CertifiedSum sum = convergent_sum(family, sum_arg, precision + mag + 5);
    HPReal pi = HPReal::pi(work);
    HPReal pipow = HPReal(pow10(work), work);
    for (long i = 0; i < pi_power; ++i)
        pipow = pipow * pi;
    HPReal rhs = HPReal::from_rational(factor, work) * sum.value.rescaled(work) / pipow;

    // pi literal error 10^-120 is negligible next to the rounding terms.
    const Rational error = amplification * sum.error_bound +
                           Rational(BigInt(static_cast<unsigned long>(pi_power + 4)), pow10(work - mag));
    if (error >= Rational(BigInt(1), pow10(precision)))
        throw precision_unachievable("functional check could not certify " + std::to_string(precision) + " digits");
    HPReal residual = abs(rhs - HPReal::from_rational(value, work));
    return {rhs.rescaled(out_digits), residual.rescaled(out_digits), error};
}

} // namespace antilimit::oracle
