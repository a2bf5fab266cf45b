// hhgc — command-line front end for the geometric Hermite–Hadamard bound
// library: single verification runs, parameter sweeps, and kernel tables.
//
// Exit codes: 0 check holds / converged, 1 failed inequality or convexity
// witness found, 2 argument/configuration error, 3 quadrature did not
// converge to the requested tolerance.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <hhgc/report_io.hpp>

namespace {

using namespace hhgc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitArgs = 2;
constexpr int kExitNonConverged = 3;

// ---------------------------------------------------------------------------
// Shared option bundle. One struct per subcommand keeps the CLI11 wiring flat.
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string check;
    std::string f;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> s;
    std::optional<double> q;
    std::string side = "both";
    std::string variant = "derived";
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::string chain_kind = "geometric";
    std::string kind;
    std::size_t samples = 100000;
    std::string config; // consumed by the pre-pass; kept so CLI11 accepts it
};

struct SweepArgs {
    std::string f;
    std::string a_grid;
    std::string b_grid;
    std::string s_grid;
    std::string q_grid;
    std::string theorem = "thm22";
    std::string side = "fafb";
    std::string variant = "derived";
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::string format = "json";
    std::string out;
    std::string config;
};

struct KernelArgs {
    std::string u_list;
    std::optional<double> u_min;
    std::optional<double> u_max;
    std::size_t points = 0;
    std::string format = "csv";
    std::string config;
};

// ---------------------------------------------------------------------------
// Grid parsing: "0.1,0.2,0.3" is an explicit list, "lo:hi:count" a linear
// range with `count` points (count = 1 collapses to lo, requiring lo == hi).
// ---------------------------------------------------------------------------

double parse_double(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw std::invalid_argument("not a finite number: '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty grid");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("range grid must be lo:hi:count, got '" + text + "'");
        const double lo = parse_double(parts[0]);
        const double hi = parse_double(parts[1]);
        const long count_l = std::strtol(parts[2].c_str(), nullptr, 10);
        if (count_l < 1) throw std::invalid_argument("grid count must be >= 1");
        const std::size_t count = static_cast<std::size_t>(count_l);
        if (count == 1) {
            if (lo != hi)
                throw std::invalid_argument("count 1 requires lo == hi in '" + text + "'");
            return {lo};
        }
        if (!(lo < hi)) throw std::invalid_argument("range grid requires lo < hi");
        std::vector<double> grid(count);
        for (std::size_t i = 0; i < count; ++i)
            grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        return grid;
    }
    std::vector<double> grid;
    for (const auto& item : split(text, ',')) grid.push_back(parse_double(item));
    if (grid.empty()) throw std::invalid_argument("empty grid");
    return grid;
}

// ---------------------------------------------------------------------------
// Flat key=value config file. Values fill in any option the command line did
// not set, by appending the equivalent flags before parsing; command-line
// flags therefore always win, and environment-variable defaults lose to both.
// ---------------------------------------------------------------------------

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

void inject_config_args(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return;

    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not key=value: '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " has an empty key");
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& arg : args)
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) present = true;
        if (!present) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

std::vector<Side> sides_from(const std::string& text) {
    if (text == "both") return {Side::fafb, Side::fsqrt};
    return {parse_side(text)};
}

// For the power_shift family, --s may be omitted: the family parameter is the
// natural convexity order, and the spec name embeds it exactly.
std::optional<double> family_s(const FunctionSpec& spec) {
    if (spec.family() != "power_shift") return std::nullopt;
    const auto pos = spec.name().find("s=");
    if (pos == std::string::npos) return std::nullopt;
    return parse_double(spec.name().substr(pos + 2));
}

void print_document(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int exit_from_reports(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports)
        if (!r.quadrature_converged) return kExitNonConverged;
    for (const auto& r : reports)
        if (!r.holds) return kExitFailed;
    return kExitOk;
}

int run_verify(const VerifyArgs& va) {
    const Interval iv{va.a, va.b};

    if (va.check == "lemma") {
        require(!va.f.empty(), "--f is required for check 'lemma'");
        const FunctionSpec spec = FunctionSpec::parse(va.f);
        const double tol = va.rel_tol;
        const double r_end = identity_residual(spec, iv, IdentityForm::endpoints, tol);
        const double r_mid = identity_residual(spec, iv, IdentityForm::midpoint, tol);
        const bool pass_end = r_end <= 10.0 * tol;
        const bool pass_mid = r_mid <= 10.0 * tol;
        json result = {{"f", spec.name()},
                       {"a", va.a},
                       {"b", va.b},
                       {"tol", tol},
                       {"endpoints", {{"residual", r_end}, {"pass", pass_end}}},
                       {"midpoint", {{"residual", r_mid}, {"pass", pass_mid}}},
                       {"holds", pass_end && pass_mid}};
        print_document(make_document("lemma", result));
        return (pass_end && pass_mid) ? kExitOk : kExitFailed;
    }

    if (va.check == "chain") {
        require(!va.f.empty(), "--f is required for check 'chain'");
        const FunctionSpec spec = FunctionSpec::parse(va.f);
        require(va.chain_kind == "geometric" || va.chain_kind == "classical",
                "--chain must be geometric or classical");
        const ChainReport rep = va.chain_kind == "classical"
                                    ? classical_chain(spec, iv, va.rel_tol, va.abs_tol)
                                    : geometric_chain(spec, iv, va.rel_tol, va.abs_tol);
        json result = rep;
        result["kind"] = va.chain_kind;
        print_document(make_document("chain", result));
        if (!rep.quadrature_converged) return kExitNonConverged;
        return rep.holds ? kExitOk : kExitFailed;
    }

    if (va.check == "thm22" || va.check == "thm23") {
        require(!va.f.empty(), "--f is required for check '" + va.check + "'");
        require(va.q.has_value(), "--q is required for check '" + va.check + "'");
        const FunctionSpec spec = FunctionSpec::parse(va.f);
        std::optional<double> s = va.s;
        if (!s) s = family_s(spec);
        require(s.has_value(), "--s is required for check '" + va.check + "'");
        const ConvexityParams params{*s, *va.q};
        EvalOptions opts;
        opts.rel_tol = va.rel_tol;
        opts.abs_tol = va.abs_tol;
        std::vector<BoundReport> reports;
        for (Side side : sides_from(va.side))
            reports.push_back(va.check == "thm22"
                                  ? power_mean_bound(spec, iv, params, side, opts)
                                  : holder_bound(spec, iv, params, side,
                                                 parse_variant(va.variant), opts));
        const json result = reports.size() == 1 ? json(reports.front()) : json(reports);
        print_document(make_document(va.check, result));
        return exit_from_reports(reports);
    }

    if (va.check == "prop31" || va.check == "prop32") {
        require(va.s.has_value(), "--s is required for check '" + va.check + "'");
        require(va.q.has_value(), "--q is required for check '" + va.check + "'");
        std::vector<PropositionReport> reports;
        for (Side side : sides_from(va.side))
            reports.push_back(va.check == "prop31"
                                  ? proposition_power_mean(va.a, va.b, *va.s, *va.q,
                                                           side, va.rel_tol)
                                  : proposition_holder(va.a, va.b, *va.s, *va.q, side,
                                                       va.rel_tol));
        const json result = reports.size() == 1 ? json(reports.front()) : json(reports);
        print_document(make_document(va.check, result));
        for (const auto& r : reports)
            if (!r.theorem_report.quadrature_converged) return kExitNonConverged;
        for (const auto& r : reports)
            if (!r.holds) return kExitFailed;
        return kExitOk;
    }

    if (va.check == "convexity") {
        require(!va.f.empty(), "--f is required for check 'convexity'");
        require(!va.kind.empty(), "--kind is required for check 'convexity'");
        const FunctionSpec spec = FunctionSpec::parse(va.f);
        const ConvexityKind kind = parse_convexity_kind(va.kind);
        std::optional<double> s_opt = va.s;
        if (!s_opt && (kind == ConvexityKind::s_convex_second_sense ||
                       kind == ConvexityKind::s_geometrically_convex))
            s_opt = family_s(spec);
        const ConvexityWitness witness =
            check_convexity(spec, iv, kind, s_opt, va.samples);
        json result = {{"f", spec.name()},       {"kind", std::string(to_string(kind))},
                       {"a", va.a},              {"b", va.b},
                       {"samples", va.samples},  {"holds", witness.holds}};
        if (s_opt) result["s"] = *s_opt;
        if (witness.violation) result["violation"] = *witness.violation;
        print_document(make_document("convexity", result));
        return witness.holds ? kExitOk : kExitFailed;
    }

    throw std::invalid_argument("unknown check: " + va.check);
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct H3Discrepancy {
    double a, b, s, q;
    CaseTag case_tag;
    double h3_printed;
    double h3_derived;
    double rel_diff;
};

void to_json(json& j, const H3Discrepancy& d) {
    j = json{{"a", d.a},
             {"b", d.b},
             {"s", d.s},
             {"q", d.q},
             {"case_tag", std::string(to_string(d.case_tag))},
             {"h3_printed", d.h3_printed},
             {"h3_derived", d.h3_derived},
             {"rel_diff", d.rel_diff}};
}

int run_sweep(const SweepArgs& sa) {
    const FunctionSpec spec = FunctionSpec::parse(sa.f);
    const Theorem theorem = parse_theorem(sa.theorem);
    const Variant variant = parse_variant(sa.variant);
    const std::vector<double> a_grid = parse_grid(sa.a_grid);
    const std::vector<double> b_grid = parse_grid(sa.b_grid);
    const std::vector<double> s_grid = parse_grid(sa.s_grid);
    const std::vector<double> q_grid = parse_grid(sa.q_grid);
    const std::vector<Side> sides = sides_from(sa.side);
    require(std::isfinite(sa.rel_tol) && sa.rel_tol > 0.0 &&
                std::isfinite(sa.abs_tol) && sa.abs_tol > 0.0,
            "tolerances must be positive");

    // Every (a, b) cross pair must be a valid interval; a violating pair is a
    // configuration error, not a skipped row.
    for (double a : a_grid)
        for (double b : b_grid)
            if (!(a < b))
                throw std::invalid_argument(
                    "sweep grid contains a pair with a >= b: a=" + std::to_string(a) +
                    ", b=" + std::to_string(b));

    EvalOptions opts;
    opts.rel_tol = sa.rel_tol;
    opts.abs_tol = sa.abs_tol;

    std::vector<BoundReport> rows;
    std::vector<H3Discrepancy> discrepancies;
    rows.reserve(a_grid.size() * b_grid.size() * s_grid.size() * q_grid.size() *
                 sides.size());

    for (double a : a_grid)
        for (double b : b_grid) {
            const Interval iv{a, b};
            for (double s : s_grid)
                for (double q : q_grid) {
                    const ConvexityParams params{s, q};
                    for (Side side : sides)
                        rows.push_back(theorem == Theorem::power_mean
                                           ? power_mean_bound(spec, iv, params, side,
                                                              opts)
                                           : holder_bound(spec, iv, params, side,
                                                          variant, opts));
                    if (theorem == Theorem::holder) {
                        const double h3_printed =
                            assemble_H(3, spec, iv, params, Variant::printed);
                        const double h3_derived = assemble_H(
                            3, spec, iv, params, Variant::derivation_consistent);
                        const double scale = std::max(std::fabs(h3_printed),
                                                      std::fabs(h3_derived));
                        const double rel =
                            scale == 0.0 ? 0.0 : std::fabs(h3_printed - h3_derived) / scale;
                        if (rel > 1e-12) {
                            const HIngredients ing = h_ingredients(spec, iv);
                            discrepancies.push_back(
                                {a, b, s, q, classify_case(ing.df_a, ing.df_b),
                                 h3_printed, h3_derived, rel});
                        }
                    }
                }
        }

    std::size_t n_holds = 0, n_failed = 0, n_nonconverged = 0;
    double worst_ratio = 0.0;
    for (const auto& r : rows) {
        if (r.holds)
            ++n_holds;
        else
            ++n_failed;
        if (!r.quadrature_converged) ++n_nonconverged;
        worst_ratio = std::max(worst_ratio, slack_ratio(r));
    }

    std::string payload;
    if (sa.format == "json") {
        json summary = {{"rows", rows.size()},
                        {"holds", n_holds},
                        {"failures", n_failed},
                        {"non_converged", n_nonconverged},
                        {"worst_slack_ratio", worst_ratio},
                        {"h3_variant_discrepancies", discrepancies}};
        json result = {{"rows", rows}, {"summary", summary}};
        payload = make_document("sweep", result).dump(2);
        payload += "\n";
    } else if (sa.format == "csv") {
        std::string text = bound_csv_header() + "\n";
        for (const auto& r : rows) text += bound_csv_row(r) + "\n";
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "# rows=%zu holds=%zu failures=%zu non_converged=%zu\n",
                      rows.size(), n_holds, n_failed, n_nonconverged);
        text += buf;
        std::snprintf(buf, sizeof buf, "# worst_slack_ratio=%.17g\n", worst_ratio);
        text += buf;
        std::snprintf(buf, sizeof buf, "# h3_variant_discrepancies=%zu\n",
                      discrepancies.size());
        text += buf;
        for (const auto& d : discrepancies) {
            std::snprintf(buf, sizeof buf,
                          "# h3_discrepancy: a=%.17g b=%.17g s=%.17g q=%.17g case=%s "
                          "h3_printed=%.17g h3_derived=%.17g rel_diff=%.17g\n",
                          d.a, d.b, d.s, d.q, std::string(to_string(d.case_tag)).c_str(),
                          d.h3_printed, d.h3_derived, d.rel_diff);
            text += buf;
        }
        payload = std::move(text);
    } else {
        throw std::invalid_argument("--format must be json or csv");
    }

    if (sa.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(sa.out, std::ios::binary | std::ios::trunc);
        if (out) out << payload;
        if (!out || !out.flush()) {
            out.close();
            std::remove(sa.out.c_str());
            std::cerr << "error: failed to write output file: " << sa.out << "\n";
            return kExitArgs;
        }
    }

    if (n_nonconverged > 0) return kExitNonConverged;
    return n_failed == 0 ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------
// kernels
// ---------------------------------------------------------------------------

int run_kernels(const KernelArgs& ka) {
    std::vector<double> grid;
    if (!ka.u_list.empty()) {
        for (const auto& item : split(ka.u_list, ',')) grid.push_back(parse_double(item));
    } else {
        require(ka.u_min.has_value() && ka.u_max.has_value() && ka.points > 0,
                "provide --u or all of --u-min, --u-max, --points");
        const double lo = *ka.u_min;
        const double hi = *ka.u_max;
        require(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo <= hi,
                "kernel range requires 0 < u-min <= u-max");
        if (ka.points == 1) {
            grid.push_back(lo);
        } else {
            const double log_lo = std::log(lo);
            const double log_hi = std::log(hi);
            for (std::size_t i = 0; i < ka.points; ++i)
                grid.push_back(std::exp(log_lo + (log_hi - log_lo) *
                                                     static_cast<double>(i) /
                                                     static_cast<double>(ka.points - 1)));
        }
        // The distinguished point u = 1 is always tabulated when the range
        // straddles it, even if the log spacing misses it.
        if (lo < 1.0 && hi > 1.0) {
            bool has_one = false;
            for (double u : grid) has_one = has_one || u == 1.0;
            if (!has_one) {
                grid.push_back(1.0);
                std::sort(grid.begin(), grid.end());
            }
        }
    }
    require(!grid.empty(), "empty kernel grid");
    for (double u : grid)
        require(std::isfinite(u) && u > 0.0, "kernel grid requires u > 0");

    struct Row {
        double u, k1, k2, k3, identity;
    };
    std::vector<Row> table;
    table.reserve(grid.size());
    for (double u : grid) {
        const double k1 = h1(u), k2 = h2(u), k3 = h3(u);
        table.push_back({u, k1, k2, k3, k1 + k2 - k3});
    }

    if (ka.format == "json") {
        json rows = json::array();
        for (const auto& row : table)
            rows.push_back({{"u", row.u},
                            {"h1", row.k1},
                            {"h2", row.k2},
                            {"h3", row.k3},
                            {"h1_plus_h2_minus_h3", row.identity}});
        print_document(make_document("kernels", json{{"rows", rows}}));
    } else if (ka.format == "csv") {
        std::cout << "u,h1,h2,h3,h1_plus_h2_minus_h3\n";
        char buf[200];
        for (const auto& row : table) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", row.u,
                          row.k1, row.k2, row.k3, row.identity);
            std::cout << buf;
        }
    } else {
        throw std::invalid_argument("--format must be json or csv");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        inject_config_args(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    }

    CLI::App app{"Geometric Hermite-Hadamard bound verifier"};
    app.require_subcommand(1);

    VerifyArgs va;
    SweepArgs sa;
    KernelArgs ka;

    CLI::App* verify = app.add_subcommand(
        "verify", "Run one check and print a JSON report to standard output");
    verify->add_option("check", va.check, "Check to run")
        ->required()
        ->check(CLI::IsMember(
            {"lemma", "chain", "thm22", "thm23", "prop31", "prop32", "convexity"}));
    verify->add_option("--f", va.f, "Function spec, e.g. power_shift:s=0.5");
    verify->add_option("--a", va.a, "Left endpoint")->required();
    verify->add_option("--b", va.b, "Right endpoint")->required();
    verify->add_option("--s", va.s, "Convexity order s in (0, 1]");
    verify->add_option("--q", va.q, "Integrability exponent q");
    verify->add_option("--side", va.side, "Bound side")
        ->check(CLI::IsMember({"fafb", "fsqrt", "both"}));
    verify->add_option("--variant", va.variant, "Case-table variant")
        ->check(CLI::IsMember({"printed", "derived", "derivation_consistent"}));
    verify->add_option("--rel-tol", va.rel_tol, "Relative quadrature tolerance")
        ->envname("HHGC_REL_TOL");
    verify->add_option("--abs-tol", va.abs_tol, "Absolute quadrature tolerance")
        ->envname("HHGC_ABS_TOL");
    verify->add_option("--chain", va.chain_kind, "Chain kind for check 'chain'")
        ->check(CLI::IsMember({"geometric", "classical"}));
    verify->add_option("--kind", va.kind, "Convexity kind for check 'convexity'")
        ->check(CLI::IsMember({"convex", "s_convex", "geom_convex", "s_geom_convex"}));
    verify->add_option("--samples", va.samples, "Convexity sample count");
    verify->add_option("--config", va.config, "Flat key=value config file");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Cartesian-product evaluation with per-row reports and a summary");
    sweep->add_option("--f", sa.f, "Function spec")->required();
    sweep->add_option("--a", sa.a_grid, "a grid: comma list or lo:hi:count")->required();
    sweep->add_option("--b", sa.b_grid, "b grid: comma list or lo:hi:count")->required();
    sweep->add_option("--s", sa.s_grid, "s grid: comma list or lo:hi:count")->required();
    sweep->add_option("--q", sa.q_grid, "q grid: comma list or lo:hi:count")->required();
    sweep->add_option("--theorem", sa.theorem, "Bound to sweep")
        ->check(CLI::IsMember({"thm22", "thm23"}));
    sweep->add_option("--side", sa.side, "Bound side (both doubles the rows)")
        ->check(CLI::IsMember({"fafb", "fsqrt", "both"}));
    sweep->add_option("--variant", sa.variant, "Case-table variant")
        ->check(CLI::IsMember({"printed", "derived", "derivation_consistent"}));
    sweep->add_option("--rel-tol", sa.rel_tol, "Relative quadrature tolerance")
        ->envname("HHGC_REL_TOL");
    sweep->add_option("--abs-tol", sa.abs_tol, "Absolute quadrature tolerance")
        ->envname("HHGC_ABS_TOL");
    sweep->add_option("--format", sa.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", sa.out, "Output path (default: standard output)");
    sweep->add_option("--config", sa.config, "Flat key=value config file");

    CLI::App* kernels = app.add_subcommand(
        "kernels", "Tabulate the h1, h2, h3 kernels over a log grid");
    kernels->add_option("--u", ka.u_list, "Explicit comma-separated u values");
    kernels->add_option("--u-min", ka.u_min, "Range start (log-spaced grid)");
    kernels->add_option("--u-max", ka.u_max, "Range end (log-spaced grid)");
    kernels->add_option("--points", ka.points, "Number of grid points");
    kernels->add_option("--format", ka.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    kernels->add_option("--config", ka.config, "Flat key=value config file");

    try {
        std::vector<std::string> full;
        full.push_back(argv[0]);
        full.insert(full.end(), args.begin(), args.end());
        std::vector<char*> cargv;
        cargv.reserve(full.size());
        for (auto& s : full) cargv.push_back(s.data());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgs;
    }

    try {
        if (verify->parsed()) return run_verify(va);
        if (sweep->parsed()) return run_sweep(sa);
        if (kernels->parsed()) return run_kernels(ka);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    }
    return kExitArgs;
}
