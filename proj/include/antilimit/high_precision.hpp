#pragma once

// Decimal fixed-point reals and complex numbers.
//
// An HPReal holds an integer mantissa m and a digit count d and denotes
// m / 10^d. Binary operations on operands of different digit counts produce
// a result at the smaller count; every rounding step is round-half-away.

#include <antilimit/error.hpp>
#include <antilimit/polynomial.hpp>
#include <antilimit/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

namespace antilimit {

inline BigInt pow10(long k) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return out;
}

/// round(n / d) with ties away from zero; d > 0.
inline BigInt div_round(const BigInt& n, const BigInt& d) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt twice = abs(r) * 2;
    if (twice >= abs(d))
        q += (sgn(n) * sgn(d) < 0) ? -1 : 1;
    return q;
}

/// pi to 120 decimal places (truncated; the 121st digit is 0).
inline constexpr std::string_view pi_digits =
    "3."
    "141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117067982148086513282306647";

inline constexpr int pi_literal_digits = 120;

class HPReal {
public:
    HPReal() = default;
    HPReal(BigInt mantissa, int digits) : m_(std::move(mantissa)), d_(digits) {}

    static HPReal from_rational(const Rational& r, int digits) {
        return HPReal(div_round(r.num() * pow10(digits), r.den()), digits);
    }
    static HPReal zero(int digits) { return HPReal(BigInt(0), digits); }

    /// Parses a plain decimal literal such as "-12.5".
    static HPReal parse(std::string_view text, int digits) {
        std::string s(text);
        bool neg = !s.empty() && s[0] == '-';
        if (neg || (!s.empty() && s[0] == '+'))
            s.erase(0, 1);
        auto dot = s.find('.');
        std::string whole = s.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
        BigInt n(whole.empty() ? "0" : whole, 10);
        BigInt f(frac.empty() ? "0" : frac, 10);
        Rational r = Rational(n) + Rational(f, pow10(static_cast<long>(frac.size())));
        return from_rational(neg ? -r : r, digits);
    }

    static HPReal pi(int digits) {
        if (digits > pi_literal_digits)
            throw precision_unachievable("pi literal carries " + std::to_string(pi_literal_digits) +
                                         " digits; requested " + std::to_string(digits));
        return parse(pi_digits, digits);
    }

    const BigInt& mantissa() const { return m_; }
    int digits() const { return d_; }
    int sign() const { return sgn(m_); }
    bool is_zero() const { return m_ == 0; }

    HPReal rescaled(int digits) const {
        if (digits == d_)
            return *this;
        if (digits > d_)
            return HPReal(m_ * pow10(digits - d_), digits);
        return HPReal(div_round(m_, pow10(d_ - digits)), digits);
    }

    Rational to_rational() const { return Rational(m_, pow10(d_)); }
    double to_double() const { return mpq_class(m_, pow10(d_)).get_d(); }

    friend HPReal operator+(const HPReal& a, const HPReal& b) {
        int d = std::min(a.d_, b.d_);
        return HPReal(a.rescaled(d).m_ + b.rescaled(d).m_, d);
    }
    friend HPReal operator-(const HPReal& a, const HPReal& b) {
        int d = std::min(a.d_, b.d_);
        return HPReal(a.rescaled(d).m_ - b.rescaled(d).m_, d);
    }
    friend HPReal operator-(const HPReal& a) { return HPReal(-a.m_, a.d_); }
    friend HPReal operator*(const HPReal& a, const HPReal& b) {
        int d = std::min(a.d_, b.d_);
        return HPReal(div_round(a.m_ * b.m_, pow10(a.d_ + b.d_ - d)), d);
    }
    friend HPReal operator/(const HPReal& a, const HPReal& b) {
        if (b.is_zero())
            throw domain_error("high-precision division by zero");
        int d = std::min(a.d_, b.d_);
        BigInt num = a.m_ * pow10(d - a.d_ + b.d_);
        BigInt den = b.m_;
        if (den < 0) {
            den = -den;
            num = -num;
        }
        return HPReal(div_round(num, den), d);
    }

    HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
    HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
    HPReal& operator*=(const HPReal& o) { return *this = *this * o; }

    friend std::strong_ordering operator<=>(const HPReal& a, const HPReal& b) {
        int d = std::max(a.d_, b.d_);
        int c = cmp(a.rescaled(d).m_, b.rescaled(d).m_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    friend bool operator==(const HPReal& a, const HPReal& b) { return (a <=> b) == 0; }

    /// Fixed notation with exactly `places` fractional digits (default: all).
    std::string to_fixed(int places = -1) const {
        if (places < 0)
            places = d_;
        BigInt v = rescaled(places).m_;
        bool neg = v < 0;
        if (neg)
            v = -v;
        std::string s = v.get_str();
        if (places > 0) {
            if (static_cast<int>(s.size()) <= places)
                s.insert(0, static_cast<std::size_t>(places + 1) - s.size(), '0');
            s.insert(s.size() - static_cast<std::size_t>(places), ".");
        }
        return (neg ? "-" : "") + s;
    }

private:
    BigInt m_{0};
    int d_ = 0;
};

inline HPReal abs(const HPReal& v) { return v.sign() < 0 ? -v : v; }

inline HPReal sqrt(const HPReal& v) {
    if (v.sign() < 0)
        throw domain_error("square root of a negative high-precision value");
    BigInt r;
    BigInt scaled = v.mantissa() * pow10(v.digits());
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
    // round to nearest: compare (r + 1/2)^2 with scaled
    BigInt twice = 2 * r + 1;
    if (twice * twice <= 4 * scaled)
        r += 1;
    return HPReal(r, v.digits());
}

/// 10^(-k) as an HPReal at the given digit count (zero when k > digits).
inline HPReal ten_to_minus(int k, int digits) {
    if (k > digits)
        return HPReal::zero(digits);
    return HPReal(pow10(digits - k), digits);
}

/// Complex value with fixed-point parts. Precision is at least 30 digits.
class HPComplex {
public:
    static constexpr int min_precision = 30;
    static constexpr int default_precision = 50;

    HPComplex() : HPComplex(HPReal::zero(default_precision), HPReal::zero(default_precision)) {}
    HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {
        if (precision() < min_precision)
            throw domain_error("HPComplex precision below " + std::to_string(min_precision) + " digits");
    }
    explicit HPComplex(const HPReal& re) : HPComplex(re, HPReal::zero(re.digits())) {}

    static HPComplex from_rational(const Rational& re, const Rational& im, int digits) {
        return HPComplex(HPReal::from_rational(re, digits), HPReal::from_rational(im, digits));
    }

    const HPReal& re() const { return re_; }
    const HPReal& im() const { return im_; }
    int precision() const { return std::min(re_.digits(), im_.digits()); }

    HPComplex rescaled(int digits) const { return HPComplex(re_.rescaled(digits), im_.rescaled(digits)); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    HPComplex conj() const { return HPComplex(re_, -im_); }
    HPReal norm2() const { return re_ * re_ + im_ * im_; }
    HPReal abs() const { return antilimit::sqrt(norm2()); }

    friend HPComplex operator+(const HPComplex& a, const HPComplex& b) {
        return HPComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend HPComplex operator-(const HPComplex& a, const HPComplex& b) {
        return HPComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend HPComplex operator-(const HPComplex& a) { return HPComplex(-a.re_, -a.im_); }
    friend HPComplex operator*(const HPComplex& a, const HPComplex& b) {
        return HPComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend HPComplex operator/(const HPComplex& a, const HPComplex& b) {
        HPReal den = b.norm2();
        HPComplex num = a * b.conj();
        return HPComplex(num.re_ / den, num.im_ / den);
    }

    std::string to_string(int places = -1) const {
        std::string s = re_.to_fixed(places);
        HPReal im = im_;
        if (im.sign() < 0)
            s += " - " + (-im).to_fixed(places) + "i";
        else
            s += " + " + im.to_fixed(places) + "i";
        return s;
    }

private:
    HPReal re_;
    HPReal im_;
};

/// Horner evaluation with coefficients converted at z's precision.
inline HPComplex poly_eval_complex(const Polynomial& p, const HPComplex& z) {
    const int d = z.precision();
    HPComplex acc(HPReal::zero(d), HPReal::zero(d));
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + HPComplex(HPReal::from_rational(*it, d), HPReal::zero(d));
    return acc;
}

} // namespace antilimit
