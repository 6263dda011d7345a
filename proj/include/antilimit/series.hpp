#pragma once

// Symbolic series and their exact partial sums.
//
// Text grammar (whitespace ignored):
//   expr     := product ('+' product)*
//   product  := [rational '*'] atom
//   atom     := ('eta' | 'beta' | 'zeta') '(' integer ')'
//             | 'prepend' '(' rational ',' expr ')'
//             | 'explicit' '[' rational (',' rational)* ']'
//             | '(' expr ')'
//   rational := ['-'] digits ['/' digits]

#include <antilimit/error.hpp>
#include <antilimit/polynomial.hpp>
#include <antilimit/rational.hpp>

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace antilimit {

enum class Family { eta, beta, zeta };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::eta: return "eta";
    case Family::beta: return "beta";
    case Family::zeta: return "zeta";
    }
    return "?";
}

class SeriesSpec {
public:
    struct Dirichlet {
        Family family;
        long s;
        bool operator==(const Dirichlet&) const = default;
    };
    struct Scaled {
        Rational mu;
        std::shared_ptr<const SeriesSpec> inner;
        bool operator==(const Scaled& o) const { return mu == o.mu && *inner == *o.inner; }
    };
    struct Sum {
        std::shared_ptr<const SeriesSpec> left;
        std::shared_ptr<const SeriesSpec> right;
        bool operator==(const Sum& o) const { return *left == *o.left && *right == *o.right; }
    };
    struct Prepended {
        Rational nu;
        std::shared_ptr<const SeriesSpec> inner;
        bool operator==(const Prepended& o) const { return nu == o.nu && *inner == *o.inner; }
    };
    struct Explicit {
        std::vector<Rational> terms;
        bool operator==(const Explicit&) const = default;
    };
    using Node = std::variant<Dirichlet, Scaled, Sum, Prepended, Explicit>;

    explicit SeriesSpec(Node n) : node_(std::move(n)) {}

    static SeriesSpec eta(long s) { return SeriesSpec(Dirichlet{Family::eta, s}); }
    static SeriesSpec beta(long s) { return SeriesSpec(Dirichlet{Family::beta, s}); }
    static SeriesSpec zeta(long s) { return SeriesSpec(Dirichlet{Family::zeta, s}); }
    static SeriesSpec dirichlet(Family f, long s) { return SeriesSpec(Dirichlet{f, s}); }
    static SeriesSpec scaled(Rational mu, SeriesSpec inner) {
        return SeriesSpec(Scaled{std::move(mu), std::make_shared<const SeriesSpec>(std::move(inner))});
    }
    static SeriesSpec sum(SeriesSpec a, SeriesSpec b) {
        return SeriesSpec(Sum{std::make_shared<const SeriesSpec>(std::move(a)),
                              std::make_shared<const SeriesSpec>(std::move(b))});
    }
    static SeriesSpec prepended(Rational nu, SeriesSpec inner) {
        return SeriesSpec(Prepended{std::move(nu), std::make_shared<const SeriesSpec>(std::move(inner))});
    }
    static SeriesSpec explicit_terms(std::vector<Rational> terms) {
        return SeriesSpec(Explicit{std::move(terms)});
    }

    const Node& node() const { return node_; }

    template <class T>
    const T* as() const { return std::get_if<T>(&node_); }

    friend bool operator==(const SeriesSpec& a, const SeriesSpec& b) { return a.node_ == b.node_; }

private:
    Node node_;
};

/// Number of available terms; nullopt for infinite series.
inline std::optional<std::size_t> term_count(const SeriesSpec& spec) {
    using S = SeriesSpec;
    return std::visit(
        [](const auto& n) -> std::optional<std::size_t> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, S::Dirichlet>) {
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, S::Scaled>) {
                return term_count(*n.inner);
            } else if constexpr (std::is_same_v<T, S::Sum>) {
                auto a = term_count(*n.left), b = term_count(*n.right);
                if (!a)
                    return b;
                if (!b)
                    return a;
                return std::min(*a, *b);
            } else if constexpr (std::is_same_v<T, S::Prepended>) {
                auto a = term_count(*n.inner);
                return a ? std::optional<std::size_t>(*a + 1) : std::nullopt;
            } else {
                return n.terms.size();
            }
        },
        spec.node());
}

/// Leading terms that sit in front of the regular tail (prepended constants).
inline std::size_t head_length(const SeriesSpec& spec) {
    using S = SeriesSpec;
    return std::visit(
        [](const auto& n) -> std::size_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, S::Scaled>)
                return head_length(*n.inner);
            else if constexpr (std::is_same_v<T, S::Sum>)
                return std::max(head_length(*n.left), head_length(*n.right));
            else if constexpr (std::is_same_v<T, S::Prepended>)
                return 1 + head_length(*n.inner);
            else
                return 0;
        },
        spec.node());
}

/// k-th term of a Dirichlet series: sign (-1)^(k-1), base k (eta, zeta) or 2k-1 (beta).
inline Rational dirichlet_term(Family family, long s, std::size_t k) {
    const long base = family == Family::beta ? 2 * static_cast<long>(k) - 1 : static_cast<long>(k);
    const bool negative = family != Family::zeta && k % 2 == 0;
    Rational mag = s <= 0 ? Rational(pow_int(base, static_cast<unsigned long>(-s)))
                          : Rational(BigInt(1), pow_int(base, static_cast<unsigned long>(s)));
    return negative ? -mag : mag;
}

/// Exact n-th term, n >= 1.
inline Rational term(const SeriesSpec& spec, std::size_t n) {
    using S = SeriesSpec;
    if (n == 0)
        throw domain_error("series terms are indexed from 1");
    return std::visit(
        [n](const auto& node) -> Rational {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, S::Dirichlet>) {
                return dirichlet_term(node.family, node.s, n);
            } else if constexpr (std::is_same_v<T, S::Scaled>) {
                return node.mu * term(*node.inner, n);
            } else if constexpr (std::is_same_v<T, S::Sum>) {
                return term(*node.left, n) + term(*node.right, n);
            } else if constexpr (std::is_same_v<T, S::Prepended>) {
                return n == 1 ? node.nu : term(*node.inner, n - 1);
            } else {
                if (n > node.terms.size())
                    throw out_of_terms("explicit series has " + std::to_string(node.terms.size()) +
                                       " terms; term " + std::to_string(n) + " requested");
                return node.terms[n - 1];
            }
        },
        spec.node());
}

struct PartialSums {
    std::vector<Rational> values; // values[m-1] = S_m
    SeriesSpec spec;
};

inline PartialSums partial_sums(const SeriesSpec& spec, std::size_t count) {
    if (count == 0)
        throw domain_error("partial_sums needs at least one term");
    PartialSums out{{}, spec};
    out.values.reserve(count);
    Rational acc;
    for (std::size_t m = 1; m <= count; ++m) {
        acc += term(spec, m);
        out.values.push_back(acc);
    }
    return out;
}

struct Branches {
    std::vector<Point> odd;  // (m, S_m), m = 1, 3, 5, ...
    std::vector<Point> even; // (m, S_m), m = 2, 4, 6, ...
};

inline Branches split(const PartialSums& sums) {
    Branches b;
    for (std::size_t i = 0; i < sums.values.size(); ++i) {
        const long m = static_cast<long>(i + 1);
        (m % 2 == 1 ? b.odd : b.even).push_back({Rational(m), sums.values[i]});
    }
    return b;
}

enum class SeriesClass { alternating_divergent, alternating_convergent, monotone_divergent, indeterminate };

inline const char* to_string(SeriesClass c) {
    switch (c) {
    case SeriesClass::alternating_divergent: return "alternating-divergent";
    case SeriesClass::alternating_convergent: return "alternating-convergent";
    case SeriesClass::monotone_divergent: return "monotone-divergent";
    case SeriesClass::indeterminate: return "indeterminate";
    }
    return "?";
}

inline constexpr std::size_t default_classify_window = 16;

/// Finite-window classification of the tail that follows any prepended head.
///
/// Alternating divergent: strict sign alternation, magnitudes non-decreasing
/// along each parity branch, and the last magnitude exceeds the first.
/// Alternating convergent: strict alternation with strictly decreasing
/// magnitudes. Monotone divergent: one sign throughout with non-decreasing
/// magnitudes. Anything else, or a window shorter than 4 terms, is
/// indeterminate.
inline SeriesClass classify(const SeriesSpec& spec, std::size_t window = default_classify_window) {
    if (window < 4)
        throw domain_error("classification window must be at least 4");
    const std::size_t head = head_length(spec);
    std::size_t n = window;
    if (auto avail = term_count(spec)) {
        if (*avail <= head)
            return SeriesClass::indeterminate;
        n = std::min(n, *avail - head);
    }
    if (n < 4)
        return SeriesClass::indeterminate;

    std::vector<Rational> t;
    t.reserve(n);
    for (std::size_t k = 1; k <= n; ++k)
        t.push_back(term(spec, head + k));
    for (const auto& v : t)
        if (v.is_zero())
            return SeriesClass::indeterminate;

    bool alternating = true, same_sign = true;
    for (std::size_t k = 1; k < n; ++k) {
        if (t[k].sign() == t[k - 1].sign())
            alternating = false;
        if (t[k].sign() != t[0].sign())
            same_sign = false;
    }
    bool branch_nondecreasing = true, strictly_decreasing = true, nondecreasing = true;
    for (std::size_t k = 1; k < n; ++k) {
        if (abs(t[k]) >= abs(t[k - 1]))
            strictly_decreasing = false;
        if (abs(t[k]) < abs(t[k - 1]))
            nondecreasing = false;
        if (k >= 2 && abs(t[k]) < abs(t[k - 2]))
            branch_nondecreasing = false;
    }
    if (alternating) {
        if (branch_nondecreasing && abs(t[n - 1]) > abs(t[0]))
            return SeriesClass::alternating_divergent;
        if (strictly_decreasing)
            return SeriesClass::alternating_convergent;
        return SeriesClass::indeterminate;
    }
    if (same_sign && nondecreasing)
        return SeriesClass::monotone_divergent;
    return SeriesClass::indeterminate;
}

// ---------------------------------------------------------------------------
// Text form

inline std::string to_string(const SeriesSpec& spec) {
    using S = SeriesSpec;
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, S::Dirichlet>) {
                return std::string(to_string(n.family)) + "(" + std::to_string(n.s) + ")";
            } else if constexpr (std::is_same_v<T, S::Scaled>) {
                std::string inner = to_string(*n.inner);
                if (n.inner->template as<S::Sum>() || n.inner->template as<S::Scaled>())
                    inner = "(" + inner + ")";
                return n.mu.to_string() + "*" + inner;
            } else if constexpr (std::is_same_v<T, S::Sum>) {
                std::string right = to_string(*n.right);
                if (n.right->template as<S::Sum>())
                    right = "(" + right + ")";
                return to_string(*n.left) + "+" + right;
            } else if constexpr (std::is_same_v<T, S::Prepended>) {
                return "prepend(" + n.nu.to_string() + "," + to_string(*n.inner) + ")";
            } else {
                std::string out = "explicit[";
                for (std::size_t i = 0; i < n.terms.size(); ++i)
                    out += (i ? "," : "") + n.terms[i].to_string();
                return out + "]";
            }
        },
        spec.node());
}

namespace detail {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_ += c;
    }

    SeriesSpec parse() {
        if (src_.empty())
            fail("empty series expression");
        SeriesSpec out = expr();
        if (pos_ != src_.size())
            fail("unexpected '" + src_.substr(pos_) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " (at offset " + std::to_string(pos_) + " in '" + src_ + "')");
    }

    bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }
    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        if (src_.compare(pos_, w.size(), w) != 0)
            return false;
        pos_ += w.size();
        return true;
    }
    bool at_number() const {
        return pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                ((src_[pos_] == '-' || src_[pos_] == '+') && pos_ + 1 < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))));
    }

    std::string number_token(bool allow_slash) {
        std::size_t start = pos_;
        if (peek('-') || peek('+'))
            ++pos_;
        auto digits = [&] {
            std::size_t s = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (s == pos_)
                fail("expected digits");
        };
        digits();
        if (allow_slash && accept('/'))
            digits();
        return src_.substr(start, pos_ - start);
    }

    Rational rational() { return Rational::parse(number_token(true)); }

    long integer() {
        std::string tok = number_token(false);
        try {
            return std::stol(tok);
        } catch (const std::exception&) {
            fail("integer argument out of range");
        }
    }

    SeriesSpec expr() {
        SeriesSpec acc = product();
        while (accept('+'))
            acc = SeriesSpec::sum(std::move(acc), product());
        return acc;
    }

    SeriesSpec product() {
        if (at_number()) {
            Rational mu = rational();
            expect('*');
            return SeriesSpec::scaled(std::move(mu), atom());
        }
        return atom();
    }

    SeriesSpec atom() {
        if (accept('(')) {
            SeriesSpec inner = expr();
            expect(')');
            return inner;
        }
        for (auto f : {Family::eta, Family::beta, Family::zeta}) {
            if (accept_word(to_string(f))) {
                expect('(');
                long s = integer();
                if (peek('/'))
                    fail("non-integer arguments are not supported");
                expect(')');
                return SeriesSpec::dirichlet(f, s);
            }
        }
        if (accept_word("prepend")) {
            expect('(');
            Rational nu = rational();
            expect(',');
            SeriesSpec inner = expr();
            expect(')');
            return SeriesSpec::prepended(std::move(nu), std::move(inner));
        }
        if (accept_word("explicit")) {
            expect('[');
            std::vector<Rational> terms;
            terms.push_back(rational());
            while (accept(','))
                terms.push_back(rational());
            expect(']');
            return SeriesSpec::explicit_terms(std::move(terms));
        }
        fail("expected eta(..), beta(..), zeta(..), prepend(..), explicit[..] or '('");
    }

    std::string src_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline SeriesSpec parse_series(std::string_view text) { return detail::SeriesParser(text).parse(); }

} // namespace antilimit
