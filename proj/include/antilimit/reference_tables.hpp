#pragma once

// Reference characteristic polynomials for eta(s) and beta(s), s = -1..-10,
// -19, -20, transcribed as printed (including the beta(-7) x^3 misprint, which
// is listed in known_misprints()).

#include <antilimit/polynomial.hpp>
#include <antilimit/rational.hpp>
#include <antilimit/series.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antilimit::reference {

struct TableRow {
    Family family;
    long s;
    /// (power, coefficient) pairs of p_odd, as printed.
    std::vector<std::pair<std::size_t, std::string>> p_odd_terms;
    /// k in p_even = -[p_odd - k]; absent where the table omits p_even.
    std::optional<std::string> relation_k;
    std::string value;

    Polynomial p_odd() const {
        std::vector<Rational> c;
        for (const auto& [power, coeff] : p_odd_terms) {
            if (c.size() <= power)
                c.resize(power + 1);
            c[power] = Rational::parse(coeff);
        }
        return Polynomial(std::move(c));
    }
};

struct Misprint {
    Family family;
    long s;
    std::size_t power;
    std::string printed;
    std::string derived;
};

inline const std::vector<Misprint>& known_misprints() {
    static const std::vector<Misprint> list{{Family::beta, -7, 3, "7000", "700"}};
    return list;
}

inline std::optional<Misprint> misprint_for(Family family, long s) {
    for (const auto& m : known_misprints())
        if (m.family == family && m.s == s)
            return m;
    return std::nullopt;
}

inline const std::vector<TableRow>& eta_rows() {
    static const std::vector<TableRow> rows{
        {Family::eta, -1, {{1, "1/2"}, {0, "1/2"}}, "1/2", "1/4"},
        {Family::eta, -2, {{2, "1/2"}, {1, "1/2"}}, "0", "0"},
        {Family::eta, -3, {{3, "1/2"}, {2, "3/4"}, {0, "-1/4"}}, "-1/4", "-1/8"},
        {Family::eta, -4, {{4, "1/2"}, {3, "1"}, {1, "-1/2"}}, "0", "0"},
        {Family::eta, -5, {{5, "1/2"}, {4, "5/4"}, {2, "-5/4"}, {0, "1/2"}}, "1/2", "1/4"},
        {Family::eta, -6, {{6, "1/2"}, {5, "3/2"}, {3, "-5/2"}, {1, "3/2"}}, "0", "0"},
        {Family::eta, -7, {{7, "1/2"}, {6, "7/4"}, {4, "-35/8"}, {2, "21/4"}, {0, "-17/8"}}, "-17/8", "-17/16"},
        {Family::eta, -8, {{8, "1/2"}, {7, "2"}, {5, "-7"}, {3, "14"}, {1, "-17/2"}}, "0", "0"},
        {Family::eta, -9, {{9, "1/2"}, {8, "9/4"}, {6, "-21/2"}, {4, "63/2"}, {2, "-153/4"}, {0, "31/2"}}, "31/2", "31/4"},
        {Family::eta, -10, {{10, "1/2"}, {9, "5/2"}, {7, "-15"}, {5, "63"}, {3, "-255/2"}, {1, "155/2"}}, "0", "0"},
        {Family::eta,
         -19,
         {{19, "1/2"},
          {18, "19/4"},
          {16, "-969/8"},
          {14, "2907"},
          {12, "-214149/4"},
          {10, "1431859/2"},
          {8, "-26113581/4"},
          {6, "37041963"},
          {4, "-900752361/8"},
          {2, "547591761/4"},
          {0, "-221930581/4"}},
         std::nullopt,
         "-221930581/8"},
        {Family::eta,
         -20,
         {{20, "1/2"},
          {19, "5"},
          {17, "-285/2"},
          {15, "3876"},
          {13, "-82365"},
          {11, "1301690"},
          {9, "-14507545"},
          {7, "105834180"},
          {5, "-900752361/2"},
          {3, "912652935"},
          {1, "-1109652905/2"}},
         std::nullopt,
         "0"},
    };
    return rows;
}

inline const std::vector<TableRow>& beta_rows() {
    static const std::vector<TableRow> rows{
        {Family::beta, -1, {{1, "1"}}, "0", "0"},
        {Family::beta, -2, {{2, "2"}, {0, "-1"}}, "-1", "-1/2"},
        {Family::beta, -3, {{3, "4"}, {1, "-3"}}, "0", "0"},
        {Family::beta, -4, {{4, "8"}, {2, "-12"}, {0, "5"}}, "5", "5/2"},
        {Family::beta, -5, {{5, "16"}, {3, "-40"}, {1, "25"}}, "0", "0"},
        {Family::beta, -6, {{6, "32"}, {4, "-120"}, {2, "150"}, {0, "-61"}}, "-61", "-61/2"},
        {Family::beta, -7, {{7, "64"}, {5, "-336"}, {3, "7000"}, {1, "-427"}}, "0", "0"},
        {Family::beta, -8, {{8, "128"}, {6, "-896"}, {4, "2800"}, {2, "-3416"}, {0, "1385"}}, "1385", "1385/2"},
        {Family::beta, -9, {{9, "256"}, {7, "-2304"}, {5, "10080"}, {3, "-20496"}, {1, "12465"}}, "0", "0"},
        {Family::beta,
         -10,
         {{10, "512"}, {8, "-5760"}, {6, "33600"}, {4, "-102480"}, {2, "124650"}, {0, "-50521"}},
         "-50521",
         "-50521/2"},
        {Family::beta,
         -19,
         {{19, "262144"},
          {17, "-11206656"},
          {15, "317521920"},
          {13, "-6779092992"},
          {11, "107193415680"},
          {9, "-1194759408128"},
          {7, "8715963060480"},
          {5, "-37090711793088"},
          {3, "75161501074020"},
          {1, "-45692713833379"}},
         std::nullopt,
         "0"},
        {Family::beta,
         -20,
         {{20, "524288"},
          {18, "-24903680"},
          {16, "793804800"},
          {14, "-19368837120"},
          {12, "357311385600"},
          {10, "-4779037632512"},
          {8, "43579815302400"},
          {6, "-247271411953920"},
          {4, "751615010740200"},
          {2, "-913854276667580"},
          {0, "370371188237525"}},
         std::nullopt,
         "370371188237525/2"},
    };
    return rows;
}

inline std::optional<TableRow> row_for(Family family, long s) {
    const auto& rows = family == Family::eta ? eta_rows() : beta_rows();
    for (const auto& r : rows)
        if (r.s == s)
            return r;
    return std::nullopt;
}

} // namespace antilimit::reference
