#pragma once

// Exact rational scalar. Storage is a GMP mpq kept in canonical form
// (positive denominator, coprime numerator) after every operation.

#include <antilimit/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace antilimit {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(const BigInt& v) : q_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "p", "-p" or "p/q" with decimal digits.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        BigInt n, d(1);
        auto read = [](const std::string& part, BigInt& out) {
            std::string_view v = part;
            if (!v.empty() && (v.front() == '+' || v.front() == '-'))
                v.remove_prefix(1);
            if (v.empty())
                return false;
            for (char c : v)
                if (c < '0' || c > '9')
                    return false;
            std::string digits = part[0] == '+' ? part.substr(1) : part;
            return out.set_str(digits, 10) == 0;
        };
        if (slash == std::string::npos) {
            if (!read(s, n))
                throw parse_error("malformed rational '" + s + "'");
        } else {
            if (!read(s.substr(0, slash), n) || !read(s.substr(slash + 1), d) || d < 0)
                throw parse_error("malformed rational '" + s + "'");
            if (d == 0)
                throw parse_error("zero denominator in '" + s + "'");
        }
        return Rational(n, d);
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw domain_error("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for any integer exponent (negative exponents invert).
inline Rational pow(const Rational& r, long e) {
    if (e < 0) {
        if (r.is_zero())
            throw domain_error("zero to a negative power");
        return pow(Rational(r.den(), r.num()), -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline BigInt pow_int(long base, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1u))
        out = -out;
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// Smallest-denominator rational strictly inside (lo, hi), lo < hi.
/// Continued-fraction descent; unique when the interval is narrow enough.
inline Rational simplest_between(Rational lo, Rational hi) {
    if (!(lo < hi))
        throw domain_error("simplest_between needs lo < hi");
    if (lo.sign() < 0 && hi.sign() > 0)
        return Rational(0);
    if (hi.sign() <= 0)
        return -simplest_between(-hi, -lo);
    // 0 <= lo < hi
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
    Rational next(fl + 1);
    if (next < hi)
        return next;
    // floor(lo) <= lo < hi <= floor(lo)+1
    Rational base(fl);
    Rational a = lo - base, b = hi - base;
    if (a.is_zero()) {
        // need p/q in (0, b): 1/q with q = floor(1/b)+1
        Rational inv = Rational(1) / b;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), inv.num().get_mpz_t(), inv.den().get_mpz_t());
        return base + Rational(BigInt(1), q + 1);
    }
    // 0 < a < b <= 1: recurse on (1/b, 1/a)
    Rational inner = simplest_between(Rational(1) / b, Rational(1) / a);
    return base + Rational(1) / inner;
}

} // namespace antilimit
