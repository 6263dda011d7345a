#pragma once

// Output documents for the command-line tool: Markdown, CSV and JSON
// renderings of characteristic pairs, anti-limits, tables and plot samples.
//
// JSON conventions: a Rational is {"num": "<int>", "den": "<int>"} with both
// fields decimal strings, a polynomial is its ascending coefficient array,
// and keys keep insertion order so output is byte-stable.

#include <antilimit/antilimit_solver.hpp>
#include <antilimit/error.hpp>
#include <antilimit/pe_engine.hpp>
#include <antilimit/reference_tables.hpp>

#include <json.hpp>

#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace antilimit {

enum class Format { markdown, csv, json };

inline Format parse_format(std::string_view text) {
    if (text == "md" || text == "markdown")
        return Format::markdown;
    if (text == "csv")
        return Format::csv;
    if (text == "json")
        return Format::json;
    throw parse_error("unknown format '" + std::string(text) + "' (expected md, csv or json)");
}

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON building blocks

inline Json to_json(const Rational& r) { return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

inline Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(to_json(c));
    return arr;
}

inline Json to_json(const HPComplex& z, int places) {
    return Json{{"re", z.re().to_fixed(places)}, {"im", z.im().to_fixed(places)}};
}

inline Rational rational_from_json(const Json& j) {
    try {
        const BigInt num(j.at("num").get<std::string>(), 10);
        const BigInt den(j.at("den").get<std::string>(), 10);
        if (den <= 0)
            throw parse_error("rational with non-positive denominator in JSON");
        Rational r(num, den);
        if (r.num() != num || r.den() != den)
            throw parse_error("rational " + num.get_str() + "/" + den.get_str() + " is not in lowest terms");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed rational: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw parse_error("rational fields must be decimal integers");
    }
}

inline Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array())
        throw parse_error("polynomial must be a coefficient array");
    std::vector<Rational> c;
    for (const auto& v : j)
        c.push_back(rational_from_json(v));
    Polynomial p(c);
    if (p.coeffs().size() != c.size())
        throw parse_error("polynomial coefficient array has trailing zeros");
    return p;
}

inline std::string fixed(const Rational& r, int places) { return HPReal::from_rational(r, places).to_fixed(places); }

/// "-[P_o(x) - k]" style rendering of p_even when k = p_odd + p_even is known.
inline std::string relation_text(const std::optional<Rational>& k, const Polynomial& p_even) {
    if (!k)
        return to_string(p_even);
    if (k->is_zero())
        return "-[P_o(x)]";
    if (k->sign() < 0)
        return "-[P_o(x) + " + (-*k).to_string() + "]";
    return "-[P_o(x) - " + k->to_string() + "]";
}

inline std::string root_text(const RealRoot& r, int places) {
    if (const auto* q = std::get_if<Rational>(&r))
        return q->to_string();
    return "~" + fixed(real_root_midpoint(r), places);
}

// ---------------------------------------------------------------------------
// Characteristic pair

inline std::string render_pair(const CharacteristicPair& pair, Format format) {
    switch (format) {
    case Format::json: {
        Json j;
        j["series"] = to_string(pair.spec);
        j["p_odd"] = to_json(pair.p_odd);
        j["p_even"] = to_json(pair.p_even);
        j["k"] = pair.structural_k ? to_json(*pair.structural_k) : Json(nullptr);
        j["fit_degree"] = pair.fit_degree;
        j["points_used"] = pair.points_used;
        j["verify_count"] = pair.verify_count;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::ostringstream os;
        os << "branch,power,coefficient\n";
        for (const auto* name : {"p_odd", "p_even"}) {
            const Polynomial& p = std::string_view(name) == "p_odd" ? pair.p_odd : pair.p_even;
            for (std::size_t i = p.coeffs().size(); i-- > 0;)
                os << name << ',' << i << ',' << p.coeff(i).to_string() << '\n';
        }
        return os.str();
    }
    case Format::markdown: break;
    }
    std::ostringstream os;
    os << "## " << to_string(pair.spec) << "\n\n";
    os << "- P_o(x) = " << to_string(pair.p_odd) << "\n";
    os << "- P_e(x) = " << to_string(pair.p_even) << "\n";
    if (pair.structural_k)
        os << "- P_e(x) = " << relation_text(pair.structural_k, pair.p_even) << ", k = "
           << pair.structural_k->to_string() << "\n";
    os << "- degree " << pair.fit_degree << ", " << pair.points_used << " points per branch + "
       << pair.verify_count << " verified\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Anti-limit (value and roots commands)

inline std::string render_anti_limit(const SeriesSpec& spec, const AntiLimit& al, Format format) {
    const int places = al.precision;
    switch (format) {
    case Format::json: {
        Json j;
        j["series"] = to_string(spec);
        j["value"] = al.value ? to_json(*al.value) : Json(nullptr);
        j["value_exact"] = al.value_exact;
        j["numeric_value"] = to_json(al.numeric_value, places);
        if (!al.first_intersection) {
            j["first_intersection"] = nullptr;
        } else if (const auto* q = std::get_if<Rational>(&*al.first_intersection)) {
            j["first_intersection"] = Json{{"exact", to_json(*q)}};
        } else {
            const auto& iv = std::get<IsolatingInterval>(*al.first_intersection);
            j["first_intersection"] = Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
        }
        j["difference"] = to_json(al.difference);
        Json rr = Json::array();
        for (const auto& r : al.rational_roots)
            rr.push_back(to_json(r));
        j["rational_roots"] = rr;
        Json ir = Json::array();
        for (const auto& iv : al.real_roots)
            ir.push_back(Json{{"lo", to_json(iv.lo)},
                              {"hi", to_json(iv.hi)},
                              {"approx", fixed((iv.lo + iv.hi) / Rational(2), places)}});
        j["real_roots"] = ir;
        Json cr = Json::array();
        for (const auto& z : al.complex_roots)
            cr.push_back(to_json(z, places));
        j["complex_roots"] = cr;
        j["precision"] = places;
        j["max_residual"] = al.max_residual.to_fixed();
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::ostringstream os;
        os << "field,value\n";
        os << "series," << to_string(spec) << "\n";
        os << "value," << (al.value ? al.value->to_string() : "") << "\n";
        os << "numeric_value," << al.numeric_value.to_string(places) << "\n";
        if (al.first_intersection)
            os << "first_intersection," << root_text(*al.first_intersection, places) << "\n";
        for (const auto& r : al.rational_roots)
            os << "rational_root," << r.to_string() << "\n";
        for (const auto& iv : al.real_roots)
            os << "real_root," << fixed((iv.lo + iv.hi) / Rational(2), places) << "\n";
        for (const auto& z : al.complex_roots)
            os << "complex_root," << z.to_string(places) << "\n";
        os << "max_residual," << al.max_residual.to_fixed() << "\n";
        return os.str();
    }
    case Format::markdown: break;
    }
    std::ostringstream os;
    os << "## " << to_string(spec) << "\n\n";
    if (al.value)
        os << "- value: " << al.value->to_string() << " (exact)\n";
    else
        os << "- value: " << al.numeric_value.to_string(places) << "\n";
    if (al.first_intersection)
        os << "- first intersection: X = " << root_text(*al.first_intersection, places) << "\n";
    else
        os << "- first intersection: none on the real line\n";
    os << "- P_o(x) - P_e(x) = " << to_string(al.difference) << "\n";
    os << "- real roots: " << al.real_root_count() << ", complex roots: " << al.complex_roots.size() << "\n";
    for (const auto& r : al.rational_roots)
        os << "  - X = " << r.to_string() << "\n";
    for (const auto& iv : al.real_roots)
        os << "  - X ~ " << fixed((iv.lo + iv.hi) / Rational(2), places) << "\n";
    for (const auto& z : al.complex_roots)
        os << "  - X ~ " << z.to_string(places) << "\n";
    os << "- max residual: " << al.max_residual.to_fixed(places) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Tables of characteristic polynomials

struct TableEntry {
    long s = 0;
    std::size_t fit_degree = 0;
    Polynomial p_odd;
    Polynomial p_even;
    std::optional<Rational> k;
    Rational value;
    std::vector<std::string> notes;
};

struct TableDocument {
    Family family = Family::eta;
    std::vector<TableEntry> rows;
};

/// Notes for coefficients where a derived row differs from the reference
/// transcription.
inline std::vector<std::string> discrepancy_notes(Family family, long s, const Polynomial& derived) {
    std::vector<std::string> notes;
    auto m = reference::misprint_for(family, s);
    auto row = reference::row_for(family, s);
    if (!m || !row)
        return notes;
    const Rational printed_s1 = row->p_odd()(Rational(1));
    notes.push_back(std::string(to_string(family)) + "(" + std::to_string(s) + "): the x^" +
                    std::to_string(m->power) + " coefficient derives to " + derived.coeff(m->power).to_string() +
                    "; the printed " + m->printed + " gives P_o(1) = " + printed_s1.to_string() +
                    " instead of S_1 = " + derived(Rational(1)).to_string());
    return notes;
}

inline TableEntry table_entry(Family family, long s, int precision = default_precision) {
    auto pair = characterize(SeriesSpec::dirichlet(family, s));
    auto al = intersect(pair, precision);
    if (!al.value)
        throw inconsistent_value("no exact value for " + std::string(to_string(family)) + "(" + std::to_string(s) + ")");
    return {s, pair.fit_degree, pair.p_odd, pair.p_even, pair.structural_k, *al.value,
            discrepancy_notes(family, s, pair.p_odd)};
}

/// Rows are independent, so they are computed concurrently.
inline TableDocument build_table(Family family, const std::vector<long>& s_values,
                                 int precision = default_precision) {
    if (family == Family::zeta)
        throw domain_error("tables cover eta and beta");
    for (long s : s_values)
        if (s > -1)
            throw domain_error("table arguments must satisfy s <= -1, got " + std::to_string(s));
    std::vector<std::future<TableEntry>> jobs;
    for (long s : s_values)
        jobs.push_back(std::async(std::launch::async, [=] { return table_entry(family, s, precision); }));
    TableDocument doc{family, {}};
    for (auto& j : jobs)
        doc.rows.push_back(j.get());
    return doc;
}

inline Json table_to_json(const TableDocument& doc) {
    Json rows = Json::array();
    for (const auto& r : doc.rows) {
        Json row;
        row["s"] = r.s;
        row["fit_degree"] = r.fit_degree;
        row["p_odd"] = to_json(r.p_odd);
        row["p_even"] = to_json(r.p_even);
        row["k"] = r.k ? to_json(*r.k) : Json(nullptr);
        row["value"] = to_json(r.value);
        row["notes"] = r.notes;
        rows.push_back(std::move(row));
    }
    Json j;
    j["family"] = to_string(doc.family);
    j["rows"] = std::move(rows);
    return j;
}

inline TableDocument table_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("table JSON: ") + e.what());
    }
    try {
        TableDocument doc;
        const auto fam = j.at("family").get<std::string>();
        if (fam == "eta")
            doc.family = Family::eta;
        else if (fam == "beta")
            doc.family = Family::beta;
        else
            throw parse_error("table JSON: unknown family " + fam);
        for (const auto& row : j.at("rows")) {
            TableEntry e;
            e.s = row.at("s").get<long>();
            e.fit_degree = row.at("fit_degree").get<std::size_t>();
            e.p_odd = polynomial_from_json(row.at("p_odd"));
            e.p_even = polynomial_from_json(row.at("p_even"));
            if (!row.at("k").is_null())
                e.k = rational_from_json(row.at("k"));
            e.value = rational_from_json(row.at("value"));
            e.notes = row.at("notes").get<std::vector<std::string>>();
            doc.rows.push_back(std::move(e));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("table JSON: ") + e.what());
    }
}

inline std::string render_table(const TableDocument& doc, Format format) {
    const std::string fam = to_string(doc.family);
    if (format == Format::json)
        return table_to_json(doc).dump(2) + "\n";
    std::ostringstream os;
    if (format == Format::csv) {
        os << "s,degree,p_odd,p_even,k,value\n";
        for (const auto& r : doc.rows)
            os << r.s << ',' << r.fit_degree << ',' << to_string(r.p_odd) << ',' << to_string(r.p_even) << ','
               << (r.k ? r.k->to_string() : "") << ',' << r.value.to_string() << '\n';
        return os.str();
    }
    os << "| s | P_o(x) | P_e(x) | " << fam << "(s) |\n";
    os << "|---|---|---|---|\n";
    std::vector<std::string> notes;
    for (const auto& r : doc.rows) {
        std::string marks;
        for (const auto& n : r.notes) {
            notes.push_back(n);
            marks += "[" + std::to_string(notes.size()) + "]";
        }
        os << "| " << r.s << " | " << to_string(r.p_odd) << marks << " | " << relation_text(r.k, r.p_even)
           << " | " << r.value.to_string() << " |\n";
    }
    if (!notes.empty()) {
        os << "\n";
        for (std::size_t i = 0; i < notes.size(); ++i)
            os << "[" << i + 1 << "] " << notes[i] << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Plot samples

/// n uniform samples of both branches over [a, b] plus a row at every real
/// root of p_odd - p_even inside the range, merged in ascending x.
inline std::string render_plot(const CharacteristicPair& pair, const AntiLimit& al, const Rational& a,
                               const Rational& b, std::size_t samples, int places) {
    if (!(a < b))
        throw domain_error("plot range needs a < b");
    if (samples < 2)
        throw domain_error("plot needs at least 2 samples");
    std::vector<Rational> xs;
    const Rational step = (b - a) / Rational(static_cast<long>(samples - 1));
    for (std::size_t i = 0; i < samples; ++i)
        xs.push_back(a + step * Rational(static_cast<long>(i)));
    std::vector<Rational> markers(al.rational_roots.begin(), al.rational_roots.end());
    for (const auto& iv : al.real_roots)
        markers.push_back((iv.lo + iv.hi) / Rational(2));
    for (const auto& m : markers)
        if (a <= m && m <= b && std::find(xs.begin(), xs.end(), m) == xs.end())
            xs.push_back(m);
    std::sort(xs.begin(), xs.end());

    std::ostringstream os;
    os << "x,p_odd,p_even\n";
    for (const auto& x : xs)
        os << fixed(x, places) << ',' << fixed(pair.p_odd(x), places) << ',' << fixed(pair.p_even(x), places)
           << '\n';
    return os.str();
}

} // namespace antilimit
