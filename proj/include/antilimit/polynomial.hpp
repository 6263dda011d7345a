#pragma once

// Dense univariate polynomials over Rational.
//
// coeffs()[i] is the coefficient of x^i. The zero polynomial stores an empty
// coefficient vector and reports no degree; every other polynomial has a
// nonzero last coefficient.

#include <antilimit/error.hpp>
#include <antilimit/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antilimit {

struct Point {
    Rational x;
    Rational y;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }
    static Polynomial monomial(const Rational& coeff, std::size_t power) {
        std::vector<Rational> c(power + 1);
        c[power] = coeff;
        return Polynomial(std::move(c));
    }
    /// x - root
    static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Zero or a nonzero constant.
    bool is_constant() const { return c_.size() <= 1; }
    std::optional<std::size_t> degree() const {
        if (c_.empty())
            return std::nullopt;
        return c_.size() - 1;
    }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return coeff(0); }

    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

enum class PolyOp { add, sub, scale, negate };

/// Coefficient-wise arithmetic; `mu` is only read for PolyOp::scale.
inline Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op,
                             const Rational& mu = Rational(1)) {
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::scale: return a * mu;
    case PolyOp::negate: return -a;
    }
    return a;
}

inline Polynomial derivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const auto& d = b.coeffs();
    if (rem.size() < d.size())
        return {Polynomial{}, a};
    std::vector<Rational> quo(rem.size() - d.size() + 1);
    const Rational lead = d.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational f = rem[k + d.size() - 1] / lead;
        quo[k] = f;
        if (f.is_zero())
            continue;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[k + j] -= f * d[j];
    }
    rem.resize(d.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Scaled to leading coefficient 1; zero stays zero.
inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.leading());
}

/// Monic greatest common divisor.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// Product of the distinct irreducible factors: p / gcd(p, p').
inline Polynomial square_free_part(const Polynomial& p) {
    if (p.is_constant())
        return p;
    Polynomial g = gcd(p, derivative(p));
    return monic(divmod(p, g).first);
}

/// Integer coefficients with gcd 1 and positive leading coefficient, equal to
/// p up to a nonzero rational factor.
inline std::vector<BigInt> primitive_integer_coeffs(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.empty())
        return {};
    BigInt l(1);
    for (const auto& v : c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    std::vector<BigInt> out;
    out.reserve(c.size());
    BigInt g(0);
    for (const auto& v : c) {
        BigInt n = v.num() * (l / v.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        out.push_back(std::move(n));
    }
    if (out.back() < 0)
        g = -g;
    for (auto& v : out)
        v /= g;
    return out;
}

/// p(x + shift), by repeated synthetic division.
inline Polynomial taylor_shift(const Polynomial& p, const Rational& shift) {
    std::vector<Rational> c = p.coeffs();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j)
            c[j - 1] += shift * c[j];
    return Polynomial(std::move(c));
}

/// Newton divided-difference coefficients f[x0], f[x0,x1], ..., f[x0..xn-1].
inline std::vector<Rational> divided_differences(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pts[i].x == pts[j].x)
                throw duplicate_abscissa("duplicate abscissa x = " + pts[i].x.to_string());
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = pts[i].y;
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t level = 0; level < n; ++level) {
        out.push_back(t[0]);
        for (std::size_t i = 0; i + 1 < n - level; ++i)
            t[i] = (t[i + 1] - t[i]) / (pts[i + level + 1].x - pts[i].x);
    }
    return out;
}

/// Monomial form of the Newton polynomial using the first `terms` coefficients.
inline Polynomial newton_to_monomial(std::span<const Rational> dd, std::span<const Point> pts,
                                     std::size_t terms) {
    Polynomial p;
    for (std::size_t k = terms; k-- > 0;)
        p = p * Polynomial::linear_root(pts[k].x) + Polynomial::constant(dd[k]);
    return p;
}

/// Evaluates the Newton form truncated to `terms` coefficients.
inline Rational newton_eval(std::span<const Rational> dd, std::span<const Point> pts,
                            std::size_t terms, const Rational& x) {
    Rational acc;
    for (std::size_t k = terms; k-- > 0;) {
        acc *= x - pts[k].x;
        acc += dd[k];
    }
    return acc;
}

/// The unique polynomial of degree < pts.size() through all points.
inline Polynomial interpolate(std::span<const Point> pts) {
    if (pts.empty())
        throw domain_error("interpolate needs at least one point");
    auto dd = divided_differences(pts);
    return newton_to_monomial(dd, pts, dd.size());
}

inline Polynomial interpolate(const std::vector<Point>& pts) {
    return interpolate(std::span<const Point>(pts));
}

enum class Parity { even, odd, neither };

inline const char* to_string(Parity p) {
    switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::neither: return "neither";
    }
    return "?";
}

/// Symmetry of q(t) = p(center + t) - offset, decided on exact coefficients.
/// The zero polynomial reports even.
inline Parity parity_about(const Polynomial& p, const Rational& center, const Rational& offset) {
    Polynomial q = taylor_shift(p - Polynomial::constant(offset), center);
    bool has_even = false, has_odd = false;
    const auto& c = q.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero())
            continue;
        (i % 2 == 0 ? has_even : has_odd) = true;
    }
    if (!has_odd)
        return Parity::even;
    if (!has_even)
        return Parity::odd;
    return Parity::neither;
}

/// Descending-degree text such as "1/2*x^3 + 3/4*x^2 - 1/4".
inline std::string to_string(const Polynomial& p, std::string_view var = "x") {
    const auto& c = p.coeffs();
    if (c.empty())
        return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        const Rational& v = c[i];
        if (v.is_zero())
            continue;
        Rational mag = abs(v);
        if (out.empty())
            out += v.sign() < 0 ? "-" : "";
        else
            out += v.sign() < 0 ? " - " : " + ";
        bool unit = mag == Rational(1);
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!unit)
            out += mag.to_string() + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace antilimit
