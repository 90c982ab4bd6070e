// charq: exact character and Hilbert series toolkit, command-line front end.
//
// Exit codes are a contract scripts can rely on:
//   0  success
//   1  input error (unreadable file, malformed JSON, schema violation)
//   2  no-fit verdict from a reconstruction request
//   3  demo self-check mismatch

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charq/json_io.hpp"
#include "charq/worked.hpp"

namespace {

using namespace charq;

constexpr int kDefaultOrder = 40;

// ---------------------------------------------------------------- rendering

std::string render_int(const Int& v) { return v.str(); }

std::string render_monomial(const Exponents& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(i + 1);
        if (alpha[i] != 1) out += "^" + std::to_string(alpha[i]);
    }
    return out;
}

std::string render_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Leading (lex-greatest) terms first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [alpha, c] = *it;
        const Int mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const std::string mono = render_monomial(alpha);
        if (mono.empty()) {
            out += render_int(mag);
        } else {
            if (mag != 1) out += render_int(mag) + "*";
            out += mono;
        }
    }
    return out;
}

std::string render_qpoly(const std::vector<Int>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Int mag = abs(coeffs[i]);
        if (out.empty()) {
            if (coeffs[i] < 0) out += "-";
        } else {
            out += coeffs[i] < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += render_int(mag);
        } else {
            if (mag != 1) out += render_int(mag) + "*";
            out += i == 1 ? "q" : "q^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_int_list(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += render_int(values[i]);
    }
    return out + "]";
}

std::string render_degs(const std::vector<int>& degs) {
    std::string out;
    int i = 0;
    while (i < static_cast<int>(degs.size())) {
        int j = i;
        while (j < static_cast<int>(degs.size()) && degs[j] == degs[i]) ++j;
        out += "(1 - q^" + std::to_string(degs[i]) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "1" : out;
}

std::string render_partition(const GenPartition& lam) {
    std::string out = "(";
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lam[i]);
    }
    return out + ")";
}

void print_fit_text(const std::optional<FittedForm>& fit) {
    if (!fit) {
        std::cout << "fit: no\n";
        return;
    }
    std::cout << "fit: yes\n";
    std::cout << "numerator: " << render_qpoly(fit->numerator) << "\n";
    std::cout << "denominator: " << render_degs(fit->denominator_degrees) << "\n";
    std::cout << "verified to: q^" << fit->verified_to << "\n";
}

// ------------------------------------------------------------------- inputs

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

// The rational spec for the invariants pipeline: either a NiceRational
// (a multigraded Hilbert series; the pipeline substitutes t_i -> t_i q), or
// {"free_algebra": n} for the free associative algebra on n letters, whose
// graded character is expanded directly.
struct PipelineInput {
    bool free_algebra = false;
    int letters = 0;
    NiceRational rational;
};

PipelineInput load_pipeline_input(const std::string& path) {
    const Json j = load_json(path);
    PipelineInput input;
    if (j.is_object() && j.contains("free_algebra")) {
        input.free_algebra = true;
        const Json n = j.at("free_algebra");
        if (!n.is_number_integer() || n.get<long long>() < 1)
            throw InputError(path + ": free_algebra needs a positive letter count");
        input.letters = static_cast<int>(n.get<long long>());
        return input;
    }
    input.rational = nice_rational_from_json(j);
    return input;
}

// ----------------------------------------------------------------- commands

struct RunConfig {
    int order = kDefaultOrder;
    std::vector<int> degs;
    bool search = false;
    std::string format = "text";
    int window = 500;
    int max_period = 50;
};

int cmd_series(const std::string& path, const RunConfig& cfg) {
    const NiceRational f = nice_rational_from_json(load_json(path));
    const CharacterSeries s = nr_series(f, cfg.order);
    if (cfg.format == "json") {
        std::cout << character_series_to_json(s).dump(2) << "\n";
    } else {
        for (int d = 0; d <= s.order(); ++d)
            std::cout << "q^" << d << ": " << render_poly(s.coeff(d)) << "\n";
    }
    return 0;
}

int cmd_schur(const std::string& path, const RunConfig& cfg) {
    const LaurentPoly p = laurent_from_json(load_json(path));
    const SchurExpansion expansion = schur_expand(p);
    if (cfg.format == "json") {
        std::cout << schur_expansion_to_json(expansion).dump(2) << "\n";
    } else {
        if (expansion.empty()) std::cout << "0\n";
        for (const auto& term : expansion)
            std::cout << render_int(term.coeff) << " * s" << render_partition(term.lam) << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& path, const RunConfig& cfg) {
    const NiceRational f = nice_rational_from_json(load_json(path));
    const Decomposition d = nr_decompose(f);
    if (cfg.format == "json") {
        std::cout << decomposition_to_json(d).dump(2) << "\n";
    } else {
        std::cout << "denominator multiset:\n";
        if (d.a.empty()) std::cout << "  (empty)\n";
        for (const auto& entry : d.a)
            std::cout << "  e" << render_partition(entry.lam) << "_" << entry.qpow << " ^ "
                      << entry.mult << "\n";
        std::cout << "numerator terms:\n";
        if (d.terms.empty()) std::cout << "  0\n";
        for (const auto& term : d.terms)
            std::cout << "  " << render_int(term.coeff) << " * s" << render_partition(term.lam)
                      << " * q^" << term.qpow << "\n";
    }
    return 0;
}

int fit_and_report(const IntSeries& series, const RunConfig& cfg, Json* report) {
    std::optional<FittedForm> fit;
    if (cfg.search) {
        fit = search_denominators(series);
    } else {
        fit = fit_numerator(series, cfg.degs);
    }
    if (report) {
        (*report)["fit_report"] = fit_report_to_json(fit);
    } else {
        print_fit_text(fit);
    }
    return fit ? 0 : 2;
}

int cmd_invariants(const std::string& rational_path, const std::string& group_path,
                   const RunConfig& cfg) {
    const PipelineInput input = load_pipeline_input(rational_path);
    const GroupSpec group = group_from_json(load_json(group_path));

    CharacterSeries character(1, 0);
    if (input.free_algebra) {
        if (input.letters != group_vars(group))
            throw InputError("letter count does not match group rank");
        character = free_algebra_character(input.letters, cfg.order);
    } else {
        if (input.rational.num_vars() != group_vars(group))
            throw InputError("rational variable count does not match group rank");
        character = nr_series(nr_substitute_tq(input.rational), cfg.order);
    }
    const IntSeries series = hilbert_invariants(group, character);

    const bool want_fit = cfg.search || !cfg.degs.empty();
    if (cfg.format == "json") {
        Json out;
        out["series"] = int_series_to_json(series);
        int code = 0;
        if (want_fit) code = fit_and_report(series, cfg, &out);
        std::cout << out.dump(2) << "\n";
        return code;
    }
    std::cout << "invariant dimensions: " << render_int_list(series.coeffs()) << "\n";
    if (!want_fit) return 0;
    return fit_and_report(series, cfg, nullptr);
}

int cmd_fit(const std::string& path, const RunConfig& cfg) {
    Json j = load_json(path);
    // invariants --format json wraps its series as {"series": {...}}; accept
    // that shape so one stage's output can feed the next through a file.
    if (j.is_object() && j.contains("series")) j = j.at("series");
    const IntSeries series = int_series_from_json(j);
    if (!cfg.search && cfg.degs.empty())
        throw InputError("fit needs --degs or --search");
    if (cfg.format == "json") {
        Json out;
        const int code = fit_and_report(series, cfg, &out);
        std::cout << out.dump(2) << "\n";
        return code;
    }
    return fit_and_report(series, cfg, nullptr);
}

// -------------------------------------------------------------------- demos

struct DemoReport {
    bool ok = true;
    Json rows = Json::array();

    void row(const std::string& name, const std::string& computed, const std::string& expected) {
        const bool match = computed == expected;
        ok = ok && match;
        rows.push_back({{"check", name},
                        {"computed", computed},
                        {"expected", expected},
                        {"match", match}});
    }

    int finish(const std::string& format) const {
        if (format == "json") {
            std::cout << Json{{"rows", rows}, {"ok", ok}}.dump(2) << "\n";
        } else {
            for (const auto& r : rows)
                std::cout << r.at("check").get<std::string>() << ": computed "
                          << r.at("computed").get<std::string>() << ", expected "
                          << r.at("expected").get<std::string>() << " -> "
                          << (r.at("match").get<bool>() ? "MATCH" : "MISMATCH") << "\n";
            std::cout << (ok ? "all checks match\n" : "some checks failed\n");
        }
        return ok ? 0 : 3;
    }
};

// Dense univariate expansion of p(q) / prod (1 - q^(d_j)), used by demos as
// the closed-form side of their tables.
std::vector<Int> expand_closed_form(std::vector<Int> numerator, const std::vector<int>& degs,
                                    int order) {
    numerator.resize(order + 1, 0);
    for (int d : degs)
        for (int i = d; i <= order; ++i) numerator[i] += numerator[i - d];
    return numerator;
}

int demo_nagata(const RunConfig& cfg) {
    DemoReport report;

    const IntSeries series = nagata_series(120);
    std::vector<Int> prefix(series.coeffs().begin(), series.coeffs().begin() + 28);
    // c_0..c_3 = 1, 4, 11, 26 at q^0, q^9, q^18, q^27.
    std::vector<Int> expected_prefix(28, 0);
    expected_prefix[0] = 1;
    expected_prefix[9] = 4;
    expected_prefix[18] = 11;
    expected_prefix[27] = 26;
    report.row("series prefix", render_int_list(prefix), render_int_list(expected_prefix));

    const auto fit = fit_numerator(series, {18, 18, 18, 18});
    report.row("fit found", fit ? "yes" : "no", "yes");
    if (fit) {
        // Closed form: (1 + 4u + 7u^2 + 10u^3 + 10u^4 + 4u^5) / (1 - u^2)^4 in u = q^9.
        std::vector<Int> expected_num(46, 0);
        expected_num[0] = 1;
        expected_num[9] = 4;
        expected_num[18] = 7;
        expected_num[27] = 10;
        expected_num[36] = 10;
        expected_num[45] = 4;
        report.row("fit numerator", render_qpoly(fit->numerator), render_qpoly(expected_num));
        report.row("fit denominator", render_degs(fit->denominator_degrees),
                   "(1 - q^18)^4");
    }

    bool identities = true;
    for (int n = 1; n <= 60; ++n) identities = identities && nagata_identity_check(n);
    report.row("coefficient identities n=1..60", identities ? "hold" : "fail", "hold");

    return report.finish(cfg.format);
}

int demo_catalan(const RunConfig& cfg) {
    DemoReport report;

    const int order = 26;
    const GroupSpec group = SpecialLinear{2};
    const IntSeries series = hilbert_invariants(group, free_algebra_character(2, order));

    // Expected: Catalan numbers via their convolution recurrence, at even
    // degrees only.
    std::vector<Int> catalan{1};
    for (int n = 0; 2 * (n + 1) <= order; ++n) {
        Int next = 0;
        for (int i = 0; i <= n; ++i) next += catalan[i] * catalan[n - i];
        catalan.push_back(next);
    }
    std::vector<Int> expected(order + 1, 0);
    for (int n = 0; 2 * n <= order; ++n) expected[2 * n] = catalan[n];
    report.row("invariant dimensions", render_int_list(series.coeffs()),
               render_int_list(expected));

    // No small linear recurrence fits a 40-term prefix.
    const IntSeries long_series =
        hilbert_invariants(group, free_algebra_character(2, 39));
    const RecurrenceGuess guess = find_recurrence(long_series, 12);
    report.row("recurrence of order <= 12 on 40 terms", guess.found ? "found" : "none", "none");

    return report.finish(cfg.format);
}

int demo_unipotent(const RunConfig& cfg) {
    DemoReport report;

    const int order = 8;
    const IntSeries series =
        hilbert_invariants(MaximalUnipotent{2}, free_algebra_character(2, order));
    // Central binomial column: binom(d, floor(d/2)).
    std::vector<Int> expected;
    for (int d = 0; d <= order; ++d) {
        Int b = 1;
        for (int i = 0; i < d / 2; ++i) b = b * (d - i) / (i + 1);
        expected.push_back(b);
    }
    report.row("invariant dimensions", render_int_list(series.coeffs()),
               render_int_list(expected));
    return report.finish(cfg.format);
}

int demo_fhl(const RunConfig& cfg) {
    DemoReport report;

    const int order = 20;
    const CharacterSeries character = nr_series(nr_substitute_tq(fhl_series()), order);
    const GroupSpec torus = DiagonalTorus{2, {{1, -1}}};
    const IntSeries series = hilbert_invariants(torus, character);

    // Closed form 1/(1 - q^2) + q^2 (1 + q^2)/(1 - q^2)^4.
    std::vector<Int> first(order + 1, 0);
    first[0] = 1;
    first = expand_closed_form(std::move(first), {2}, order);
    std::vector<Int> second(order + 1, 0);
    second[2] = 1;
    second[4] = 1;
    second = expand_closed_form(std::move(second), {2, 2, 2, 2}, order);
    std::vector<Int> expected(order + 1);
    for (int i = 0; i <= order; ++i) expected[i] = first[i] + second[i];
    report.row("invariant dimensions", render_int_list(series.coeffs()),
               render_int_list(expected));

    const auto fit = fit_numerator(series, {2, 2, 2, 2});
    report.row("fit found", fit ? "yes" : "no", "yes");
    if (fit) {
        const std::vector<Int> expected_num{1, 0, -2, 0, 4, 0, -1};
        report.row("fit numerator", render_qpoly(fit->numerator), render_qpoly(expected_num));
    }
    return report.finish(cfg.format);
}

int demo_semigroup(const RunConfig& cfg) {
    DemoReport report;

    const QuadraticIrrational beta(2, -1, 2, 1);  // 2 - sqrt(2)
    const IntSeries diffs = semigroup_differences(beta, cfg.window);
    bool zero_one = true;
    for (const auto& v : diffs.coeffs()) zero_one = zero_one && (v == 0 || v == 1);
    report.row("first differences lie in {0,1}", zero_one ? "yes" : "no", "yes");

    const auto period = detect_eventual_period(diffs, 100, cfg.max_period);
    report.row("eventual period of the differences",
               period ? "period " + std::to_string(period->second) + " at offset " +
                            std::to_string(period->first)
                      : "none",
               "none");

    // Rational control: beta = 3/7 must be eventually periodic with period
    // dividing 7.
    const QuadraticIrrational rational_beta(3, 0, 0, 7);
    const auto control = detect_eventual_period(semigroup_differences(rational_beta, 200), 100,
                                                cfg.max_period);
    report.row("rational control 3/7 period divides 7",
               control && 7 % control->second == 0 ? "yes" : "no", "yes");

    return report.finish(cfg.format);
}

int cmd_demo(const std::string& name, const RunConfig& cfg) {
    if (name == "nagata") return demo_nagata(cfg);
    if (name == "catalan") return demo_catalan(cfg);
    if (name == "unipotent") return demo_unipotent(cfg);
    if (name == "fhl") return demo_fhl(cfg);
    if (name == "semigroup") return demo_semigroup(cfg);
    throw InputError("unknown demo \"" + name + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "charq: exact Hilbert series of invariant subspaces of graded "
        "representations.\nExit codes: 0 success, 1 input error, 2 no-fit, "
        "3 demo mismatch."};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--order", cfg.order, "series truncation order (default 40)")
        ->envname("CHARQ_ORDER");
    app.add_option("--degs", cfg.degs, "denominator degrees for fitting, e.g. 2,2,2,2")
        ->delimiter(',');
    app.add_flag("--search", cfg.search,
                 "search denominator degree multisets (total <= 60, parts <= 30)");
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--window", cfg.window, "difference window for the semigroup demo");
    app.add_option("--max-period", cfg.max_period, "period bound for the semigroup demo");

    std::string rational_path, poly_path, group_path, series_path, demo_name;

    auto* series_cmd = app.add_subcommand("series", "expand a rational function as a q-series");
    series_cmd->add_option("rational", rational_path, "rational function JSON")->required();

    auto* schur_cmd = app.add_subcommand("schur", "Schur-expand a symmetric polynomial");
    schur_cmd->add_option("poly", poly_path, "polynomial JSON (array of terms)")->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "rewrite a rational function over orbit denominators");
    decompose_cmd->add_option("rational", rational_path, "rational function JSON")->required();

    auto* invariants_cmd = app.add_subcommand(
        "invariants", "Hilbert series of the invariants of a graded representation");
    invariants_cmd->add_option("rational", rational_path, "multigraded series JSON")->required();
    invariants_cmd->add_option("group", group_path, "group JSON")->required();

    auto* fit_cmd = app.add_subcommand("fit", "fit a rational form to an integer series");
    fit_cmd->add_option("series", series_path, "integer series JSON")->required();

    auto* demo_cmd = app.add_subcommand(
        "demo", "self-checking walkthroughs: nagata, catalan, unipotent, fhl, semigroup");
    demo_cmd->add_option("name", demo_name, "demo name")->required();

    // Shared options live on the parent app; let subcommands hand them back up.
    for (CLI::App* sub : {series_cmd, schur_cmd, decompose_cmd, invariants_cmd, fit_cmd, demo_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep the documented exit-code contract: bad usage is an input
        // error (1), while --help and --version stay 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cfg.order < 0) throw InputError("--order must be nonnegative");
        if (series_cmd->parsed()) return cmd_series(rational_path, cfg);
        if (schur_cmd->parsed()) return cmd_schur(poly_path, cfg);
        if (decompose_cmd->parsed()) return cmd_decompose(rational_path, cfg);
        if (invariants_cmd->parsed()) return cmd_invariants(rational_path, group_path, cfg);
        if (fit_cmd->parsed()) return cmd_fit(series_path, cfg);
        if (demo_cmd->parsed()) return cmd_demo(demo_name, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
