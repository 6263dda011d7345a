#pragma once

// Command-line front end. run_cli() takes the arguments after the program
// name and returns the process exit status:
//   0 success, 1 verification failure or internal error,
//   2 series rejected (not polynomial, no intersection, ...),
//   3 bad input (series text, ranges, flags), 4 file I/O.

#include <antilimit/antilimit.hpp>
#include <antilimit/render.hpp>
#include <antilimit/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace antilimit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_rejected = 2;
inline constexpr int exit_input = 3;
inline constexpr int exit_io = 4;

class io_failure : public error {
public:
    using error::error;
};

inline constexpr const char* grammar_help = R"(Series grammar:
  expr     := product ('+' product)*
  product  := [rational '*'] atom
  atom     := eta(S) | beta(S) | zeta(S)          S an integer
            | prepend(rational, expr)
            | explicit[r1, r2, ...]
            | (expr)
  rational := [-]digits[/digits]
Examples: eta(-3)  beta(-2)+eta(-3)  3/2*eta(-1)  prepend(1, eta(-2))  explicit[1,-2,10,-10,26,-26])";

/// Contract name reported for a rejected series.
inline std::string rejection_name(const summability_error& e) {
    if (dynamic_cast<const not_polynomial*>(&e))
        return "NotPolynomial";
    if (dynamic_cast<const no_intersection*>(&e))
        return "NoIntersection";
    if (dynamic_cast<const not_alternating_divergent*>(&e))
        return "NotAlternatingDivergent";
    if (dynamic_cast<const insufficient_terms*>(&e))
        return "InsufficientTerms";
    if (dynamic_cast<const inconsistent_value*>(&e))
        return "InconsistentValue";
    return "NotSummable";
}

/// "a..b" with rational endpoints.
inline std::pair<Rational, Rational> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw parse_error("range '" + text + "' must look like a..b");
    try {
        return {Rational::parse(text.substr(0, dots)), Rational::parse(text.substr(dots + 2))};
    } catch (const error&) {
        throw parse_error("range '" + text + "' has a malformed endpoint");
    }
}

/// Integer list a, a-1, ..., b (or upward) from "a..b"; a single integer is a
/// one-element range.
inline std::vector<long> parse_s_range(const std::string& text) {
    Rational lo, hi;
    if (text.find("..") == std::string::npos) {
        lo = hi = Rational::parse(text);
    } else {
        std::tie(lo, hi) = parse_range(text);
    }
    if (!lo.is_integer() || !hi.is_integer())
        throw parse_error("range '" + text + "' needs integer endpoints");
    const long a = lo.num().get_si(), b = hi.num().get_si();
    if (a > -1 || b > -1)
        throw domain_error("table range must satisfy s <= -1");
    std::vector<long> out;
    const long step = a <= b ? 1 : -1;
    for (long s = a;; s += step) {
        out.push_back(s);
        if (s == b)
            break;
    }
    return out;
}

inline Family parse_family(const std::string& text) {
    if (text == "eta")
        return Family::eta;
    if (text == "beta")
        return Family::beta;
    throw parse_error("unknown family '" + text + "' (expected eta or beta)");
}

/// Characterizes a series, letting through series the classifier cannot
/// decide on (such as Grandi's 1 - 1 + 1 - ...) so that the fit itself
/// reports why they have no value.
inline CharacteristicPair characterize_lenient(const SeriesSpec& spec) {
    CharacterizeOptions opts;
    opts.override_classification = classify(spec) == SeriesClass::indeterminate;
    return characterize(spec, opts);
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io_failure("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f)
        throw io_failure("failed writing '" + path + "'");
}

inline std::string render_suites(const std::vector<SuiteResult>& results, Format format) {
    std::size_t passed = 0, total = 0;
    for (const auto& r : results) {
        passed += r.passed;
        total += r.total();
    }
    std::ostringstream os;
    if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back(Json{{"suite", r.name}, {"passed", r.passed}, {"total", r.total()}, {"failures", r.failures}});
        Json j{{"suites", arr}, {"passed", passed}, {"total", total}};
        return j.dump(2) + "\n";
    }
    if (format == Format::csv) {
        os << "suite,passed,total\n";
        for (const auto& r : results)
            os << r.name << ',' << r.passed << ',' << r.total() << '\n';
        return os.str();
    }
    os << "| suite | passed | total |\n|---|---|---|\n";
    for (const auto& r : results)
        os << "| " << r.name << " | " << r.passed << " | " << r.total() << " |\n";
    os << "\n" << passed << "/" << total << " checks passed\n";
    for (const auto& r : results)
        for (const auto& f : r.failures)
            os << "FAILED [" << r.name << "] " << f << "\n";
    return os.str();
}

inline std::string render_deduction(const SeriesSpec& combined, const SeriesSpec& known, const Rational& known_value,
                                    const SeriesSpec& unknown, const Rational& value, Format format) {
    std::optional<std::pair<std::string, Rational>> zeta;
    if (const auto* d = unknown.as<SeriesSpec::Dirichlet>(); d && d->family == Family::eta && d->s != 1)
        zeta = {to_string(SeriesSpec::zeta(d->s)), oracle::eta_zeta_convert(d->s, oracle::EtaValue{value})};

    if (format == Format::json) {
        Json j;
        j["combined"] = to_string(combined);
        j["known"] = Json{{"series", to_string(known)}, {"value", to_json(known_value)}};
        j["deduced"] = Json{{"series", to_string(unknown)}, {"value", to_json(value)}};
        j["zeta"] = zeta ? Json{{"series", zeta->first}, {"value", to_json(zeta->second)}} : Json(nullptr);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == Format::csv) {
        os << "series,value\n" << to_string(known) << ',' << known_value.to_string() << '\n';
        os << to_string(unknown) << ',' << value.to_string() << '\n';
        if (zeta)
            os << zeta->first << ',' << zeta->second.to_string() << '\n';
        return os.str();
    }
    os << "## " << to_string(combined) << "\n\n";
    os << "- " << to_string(known) << " = " << known_value.to_string() << " (known)\n";
    os << "- " << to_string(unknown) << " = " << value.to_string() << "\n";
    if (zeta)
        os << "- " << zeta->first << " = " << zeta->second.to_string() << "\n";
    return os.str();
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact values for divergent alternating series by polynomial extrapolation", "antilimit"};
    app.footer(grammar_help);
    app.require_subcommand(1);
    app.fallthrough();

    int precision = default_precision;
    std::string format_text = "md";
    app.add_option("--precision", precision, "Decimal digits for numeric output (>= 30)")
        ->capture_default_str();

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "md, csv or json")->capture_default_str();
    };

    std::string series_text, known_text, value_text, family_text, range_text, out_path, suite = "all";
    std::size_t samples = 201;
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* value = app.add_subcommand("value", "Assigned value, first intersection and all roots");
    value->add_option("series", series_text)->required();
    add_format(value);

    auto* poly = app.add_subcommand("poly", "Characteristic polynomials of the odd/even partial sums");
    poly->add_option("series", series_text)->required();
    add_format(poly);

    auto* table = app.add_subcommand("table", "Characteristic polynomial table for eta or beta");
    table->add_option("family", family_text)->required();
    table->add_option("range", range_text, "s range such as -1..-10")->required();
    add_format(table);

    auto* roots = app.add_subcommand("roots", "Roots of P_o(x) - P_e(x)");
    roots->add_option("series", series_text)->required();
    add_format(roots);

    auto* deduce_cmd = app.add_subcommand("deduce", "Value of one summand from a summable combination");
    deduce_cmd->add_option("combined", series_text, "Sum of the unknown and a known series")->required();
    deduce_cmd->add_option("--known", known_text, "The summand with a known value")->required();
    deduce_cmd->add_option("--value", value_text, "Value of the known summand (computed when omitted)");
    add_format(deduce_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
    verify_cmd->add_option("--suite", suite, "tables, oracle, hardy, functional or all")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "Seed for the randomized Hardy cases")->capture_default_str();
    add_format(verify_cmd);

    auto* plot = app.add_subcommand("plot", "CSV samples of both branches with root markers");
    plot->add_option("series", series_text)->required();
    plot->add_option("--range", range_text, "x range a..b")->required();
    plot->add_option("--samples", samples, "Number of uniform samples")->capture_default_str();
    plot->add_option("--out", out_path, "Output file (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (precision < HPComplex::min_precision)
            throw domain_error("--precision must be at least " + std::to_string(HPComplex::min_precision));
        const Format format = parse_format(format_text);

        if (value->parsed() || roots->parsed()) {
            const SeriesSpec spec = parse_series(series_text);
            auto al = intersect(characterize_lenient(spec), precision);
            out << render_anti_limit(spec, al, format);
        } else if (poly->parsed()) {
            out << render_pair(characterize_lenient(parse_series(series_text)), format);
        } else if (table->parsed()) {
            const Family family = parse_family(family_text);
            out << render_table(build_table(family, parse_s_range(range_text), precision), format);
        } else if (deduce_cmd->parsed()) {
            const SeriesSpec combined = parse_series(series_text);
            const SeriesSpec known = parse_series(known_text);
            const auto* sum = combined.as<SeriesSpec::Sum>();
            if (!sum)
                throw spec_mismatch(to_string(combined) + " is not a sum of two series");
            const SeriesSpec& unknown = *sum->left == known ? *sum->right : *sum->left;
            SolveOptions opts;
            opts.precision = precision;
            const Rational known_value =
                value_text.empty() ? exact_value(known, opts) : Rational::parse(value_text);
            const Rational v = deduce(combined, known, known_value, opts);
            out << render_deduction(combined, known, known_value, unknown, v, format);
        } else if (verify_cmd->parsed()) {
            VerifyOptions opts;
            opts.seed = seed;
            auto results = run_suites(suite, opts);
            out << render_suites(results, format);
            for (const auto& r : results)
                if (!r.ok())
                    return exit_failure;
        } else if (plot->parsed()) {
            const SeriesSpec spec = parse_series(series_text);
            auto [a, b] = parse_range(range_text);
            auto pair = characterize_lenient(spec);
            auto al = intersect(pair, precision);
            emit(render_plot(pair, al, a, b, samples, precision), out_path, out);
        }
        return exit_ok;
    } catch (const summability_error& e) {
        err << "error [" << rejection_name(e) << "]: " << e.what() << "\n";
        if (dynamic_cast<const no_intersection*>(&e))
            err << "hint: add a series with a known value and run `antilimit deduce`\n";
        return exit_rejected;
    } catch (const io_failure& e) {
        err << "error [IO]: " << e.what() << "\n";
        return exit_io;
    } catch (const parse_error& e) {
        err << "error [Parse]: " << e.what() << "\n";
        return exit_input;
    } catch (const domain_error& e) {
        err << "error [Domain]: " << e.what() << "\n";
        return exit_input;
    } catch (const spec_mismatch& e) {
        err << "error [SpecMismatch]: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace antilimit::cli
