// cli.cpp - argument and config handling plus the single, pair and rs-verify drivers
#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dtrain/convergence.hpp"
#include "dtrain/errors.hpp"
#include "dtrain/model.hpp"
#include "dtrain/riemann_stieltjes.hpp"
#include "dtrain/single_detector.hpp"
#include "dtrain/two_detector.hpp"
#include "svg_plot.hpp"

namespace dtrain::cli {

namespace {

const std::set<std::string> known_keys = {"mode", "switching", "q",   "gamma", "s",     "d",
                                          "r",    "n",         "tol", "out",   "plot", "levels"};

double parse_real(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("--" + key + ": cannot parse real value '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value)) {
        throw DomainError("--" + key + ": cannot parse real value '" + text + "'");
    }
    return value;
}

int parse_int(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw DomainError("--" + key + ": cannot parse integer '" + text + "'");
    }
    if (used != text.size()) {
        throw DomainError("--" + key + ": cannot parse integer '" + text + "'");
    }
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw DomainError("--" + key + ": cannot parse boolean '" + text + "'");
}

std::string trim(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r");
    std::size_t last = text.find_last_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    return text.substr(first, last - first + 1);
}

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("config: cannot open " + path);
    }
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw DomainError("config: line " + std::to_string(lineno) + " is not key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (known_keys.count(key) == 0) {
            throw DomainError("config: unknown key '" + key + "' on line " +
                              std::to_string(lineno));
        }
        values[key] = value;
    }
    return values;
}

// merged view: command line beats config file beats built-in default
struct Settings {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) > 0; }

    std::string require(const std::string& mode, const std::string& key) const {
        const auto it = values.find(key);
        if (it == values.end()) {
            throw DomainError(mode + ": missing required option --" + key);
        }
        return it->second;
    }
};

SwitchingSpec switching_from(const Settings& settings, const std::string& mode) {
    const std::string name = settings.require(mode, "switching");
    if (name == "heaviside") {
        return SwitchingSpec::heaviside();
    }
    if (name == "gaussian") {
        return SwitchingSpec::truncated_gaussian(
            parse_real("q", settings.require(mode, "q")));
    }
    if (name == "bump") {
        return SwitchingSpec::bump();
    }
    throw DomainError(mode + ": unknown switching '" + name + "'");
}

std::string output_path(const Settings& settings, const std::string& name) {
    const std::string dir = settings.has("out") ? settings.values.at("out") : ".";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("out: cannot create directory " + dir);
    }
    return (std::filesystem::path(dir) / name).string();
}

double tol_from(const Settings& settings) {
    const double tol =
        settings.has("tol") ? parse_real("tol", settings.values.at("tol")) : 1e-10;
    if (!(tol > 0.0)) {
        throw DomainError("--tol: must be positive");
    }
    return tol;
}

void print_report_line(const ConvergenceReport& report) {
    if (report.fit_valid) {
        std::printf("%s: fitted slope %.4f over N in [%d, %d] (rms residual %.3f)\n",
                    report.observable_id.c_str(), report.fitted_slope, report.fit_lo,
                    report.fit_hi, report.fit_residual);
    } else {
        std::printf("%s: slope fit unavailable (fewer than four usable points in window)\n",
                    report.observable_id.c_str());
    }
}

void emit_outputs(const ConvergenceReport& report, const Settings& settings,
                  const std::string& stem, const std::string& annotation) {
    const std::string csv_path = output_path(settings, stem + ".csv");
    emit_report_csv(report, csv_path);
    std::printf("wrote %s\n", csv_path.c_str());
    const bool plot =
        settings.has("plot") && parse_bool("plot", settings.values.at("plot"));
    if (plot) {
        const std::string svg_path = output_path(settings, stem + ".svg");
        write_loglog_svg(report, annotation, svg_path);
        std::printf("wrote %s\n", svg_path.c_str());
    }
}

int run_single(const Settings& settings) {
    const SwitchingSpec switching = switching_from(settings, "single");
    const double gamma = parse_real("gamma", settings.require("single", "gamma"));
    const double s = parse_real("s", settings.require("single", "s"));
    const std::vector<int> counts = parse_counts(settings.require("single", "n"));
    const double tol = tol_from(settings);

    SingleParams params;
    params.gamma = gamma;
    params.smearing = SmearingSpec::gaussian(s);
    params.switching = switching;
    params.validate();

    const double exact = pe_exact(params, tol);
    std::printf("exact P_e / lambda^2 = %.12g\n", exact);
    const TrainObservable observable = [&params, tol](int n) {
        return std::complex<double>(pe_train(params, n, tol), 0.0);
    };
    const std::string stem = std::string("pe_") + switching_name(switching.kind);
    const ConvergenceReport report = sweep(stem, observable, counts, exact, tol);
    print_report_line(report);

    char annotation[160];
    std::snprintf(annotation, sizeof(annotation),
                  "switching %s, gamma %.6g, s %.6g, tol %.3g",
                  switching_name(switching.kind), gamma, s, tol);
    emit_outputs(report, settings, stem, annotation);
    return 0;
}

int run_pair(const Settings& settings) {
    if (settings.has("switching") && settings.values.at("switching") != "heaviside") {
        throw DomainError("pair: only heaviside switching is supported");
    }
    const double gamma = parse_real("gamma", settings.require("pair", "gamma"));
    const double d = parse_real("d", settings.require("pair", "d"));
    const double r = parse_real("r", settings.require("pair", "r"));
    const std::vector<int> counts = parse_counts(settings.require("pair", "n"));
    const double tol = tol_from(settings);

    PairParams params;
    params.gamma = gamma;
    params.d = d;
    params.r = r;
    params.switching = SwitchingSpec::heaviside();
    params.validate();

    const double exact_ii = l_ii_exact(params, tol);
    const double exact_ab = l_ab_exact(params, tol);
    const std::complex<double> exact_m = m_exact(params, tol);
    std::printf("exact L_ii / lambda^2 = %.12g\n", exact_ii);
    std::printf("exact L_AB / lambda^2 = %.12g\n", exact_ab);
    std::printf("exact M / lambda^2 = %.12g %+.12gi\n", exact_m.real(), exact_m.imag());

    std::map<int, PairState2> cache;
    const auto state_at = [&](int n) -> const PairState2& {
        auto it = cache.find(n);
        if (it == cache.end()) {
            it = cache.emplace(n, pair_train(params, n, tol)).first;
        }
        return it->second;
    };

    char annotation[160];
    std::snprintf(annotation, sizeof(annotation), "gamma %.6g, d %.6g, r %.6g, tol %.3g",
                  gamma, d, r, tol);

    const ConvergenceReport report_ii = sweep(
        "l_ii", [&](int n) { return std::complex<double>(state_at(n).l_ii, 0.0); }, counts,
        exact_ii, tol);
    print_report_line(report_ii);
    emit_outputs(report_ii, settings, "l_ii", annotation);

    const ConvergenceReport report_ab = sweep(
        "l_ab", [&](int n) { return std::complex<double>(state_at(n).l_ab, 0.0); }, counts,
        exact_ab, tol);
    print_report_line(report_ab);
    emit_outputs(report_ab, settings, "l_ab", annotation);

    const ConvergenceReport report_m =
        sweep("m", [&](int n) { return state_at(n).m; }, counts, exact_m, tol);
    print_report_line(report_m);
    emit_outputs(report_m, settings, "m", annotation);

    const IrSensitivity ir = ir_sensitivity(params);
    std::printf("infrared cutoff sensitivity at kappa_min = %.3g: "
                "dL_ii %.3e, dL_AB %.3e, dM %.3e\n",
                ir.kappa_min, ir.dl_ii, ir.dl_ab, ir.dm);
    return 0;
}

// ---------- lemma battery ----------

struct BatteryLine {
    std::string label;
    bool pass{false};
    std::string detail;
};

BatteryLine check_lemma1(const std::string& label, const rs::Fn& f, const rs::Fn& g,
                         const rs::Rect& rect, int mesh_levels, double tol) {
    const rs::Lemma1Result result = rs::verify_lemma1(f, g, rect, mesh_levels, tol);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "discrepancy %.3e (tol %.1e)", result.discrepancy,
                  tol);
    return {label, result.pass, detail};
}

BatteryLine check_v_bound(int k, const std::vector<int>& kick_counts, int per_axis) {
    double worst_excess = -1e308;
    for (const int n_kicks : kick_counts) {
        const double bound = 0.5 * k * std::pow(double(n_kicks), k - 1);
        std::vector<int> idx(k, 0);
        std::vector<double> z(k, 0.0);
        const long long total = static_cast<long long>(std::pow(double(per_axis + 1), k));
        for (long long cursor = 0; cursor < total; ++cursor) {
            for (int i = 0; i < k; ++i) {
                z[i] = double(idx[i]) / per_axis;
            }
            const double excess = std::abs(rs::v_n(k, n_kicks, z)) - bound;
            worst_excess = std::max(worst_excess, excess);
            for (int i = k - 1; i >= 0; --i) {
                if (++idx[i] <= per_axis) {
                    break;
                }
                idx[i] = 0;
            }
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max |v| minus bound %.3e", worst_excess);
    char label[96];
    std::snprintf(label, sizeof(label), "lemma2 step-count bound k=%d N=1,2,4,8", k);
    return {label, worst_excess <= 1e-9, detail};
}

BatteryLine check_variation(const std::string& label, const rs::Fn& g, const rs::Rect& rect,
                            int levels, double exact, double rel_tol) {
    const double estimate = rs::variation_estimate(g, rect, levels);
    const double residual = std::abs(estimate - exact) / std::abs(exact);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "estimate %.6f vs %.6f, rel residual %.3e (tol %.1e)",
                  estimate, exact, residual, rel_tol);
    return {label, residual <= rel_tol, detail};
}

int run_rs_verify(const Settings& settings) {
    const int levels =
        settings.has("levels") ? parse_int("levels", settings.values.at("levels")) : 8;
    if (levels < 1 || levels > 8) {
        throw DomainError("--levels: must lie in 1..8");
    }
    // coarser dyadic depth loosens the equality tolerance by one doubling per level
    const double lemma3_tol = 0.01 * std::pow(2.0, 8 - levels);

    const rs::Fn product = [](const std::vector<double>& z) {
        double p = 1.0;
        for (const double zi : z) {
            p *= zi;
        }
        return std::complex<double>(p, 0.0);
    };

    std::vector<BatteryLine> lines;

    const rs::Rect box2{{0.5, 0.25}, {1.5, 1.25}};
    const std::complex<double> delta = rs::delta_n(product, box2);
    lines.push_back({"delta2 of the product function equals the box volume",
                     delta == std::complex<double>(1.0, 0.0),
                     "increment " + std::to_string(delta.real())});

    lines.push_back(check_lemma1(
        "lemma1 n=1 f=t(1-t) g=t^2",
        [](const std::vector<double>& z) {
            return std::complex<double>(z[0] * (1.0 - z[0]), 0.0);
        },
        [](const std::vector<double>& z) { return std::complex<double>(z[0] * z[0], 0.0); },
        rs::Rect{{0.0}, {1.0}}, 10, 1e-3));
    lines.push_back(check_lemma1(
        "lemma1 n=2 f=z1(1-z1)z2(1-z2) g=z1*z2",
        [](const std::vector<double>& z) {
            return std::complex<double>(z[0] * (1.0 - z[0]) * z[1] * (1.0 - z[1]), 0.0);
        },
        product, rs::Rect{{0.0, 0.0}, {1.0, 1.0}}, 7, 1e-3));

    lines.push_back(check_v_bound(1, {1, 2, 4, 8}, 10000));
    lines.push_back(check_v_bound(2, {1, 2, 4, 8}, 100));
    lines.push_back(check_v_bound(3, {1, 2, 4, 8}, 21));

    lines.push_back(check_variation(
        "lemma3 n=1 g=t^2 on [0,1]",
        [](const std::vector<double>& z) { return std::complex<double>(z[0] * z[0], 0.0); },
        rs::Rect{{0.0}, {1.0}}, levels, 1.0, lemma3_tol));
    lines.push_back(check_variation("lemma3 n=2 g=z1*z2 on [0,1]^2", product,
                                    rs::Rect{{0.0, 0.0}, {1.0, 1.0}}, levels, 1.0,
                                    lemma3_tol));
    const double sin1 = std::sin(1.0);
    lines.push_back(check_variation(
        "lemma3 n=2 g=sin(z1)sin(z2) on [0,1]^2",
        [](const std::vector<double>& z) {
            return std::complex<double>(std::sin(z[0]) * std::sin(z[1]), 0.0);
        },
        rs::Rect{{0.0, 0.0}, {1.0, 1.0}}, levels, sin1 * sin1, lemma3_tol));

    bool all_pass = true;
    for (const BatteryLine& line : lines) {
        std::printf("%s: %s (%s)\n", line.label.c_str(), line.pass ? "PASS" : "FAIL",
                    line.detail.c_str());
        all_pass = all_pass && line.pass;
    }
    std::printf("rs-verify: %zu checks, %s\n", lines.size(),
                all_pass ? "all passed" : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}

} // namespace

std::vector<int> parse_counts(const std::string& text) {
    if (text.empty()) {
        throw DomainError("--n: empty count specification");
    }
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream stream(text);
        std::string part;
        while (std::getline(stream, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() != 3 || parts[2].rfind("log", 0) != 0) {
            throw DomainError("--n: range form is lo:hi:logK");
        }
        const int lo = parse_int("n", parts[0]);
        const int hi = parse_int("n", parts[1]);
        const int k = parse_int("n", parts[2].substr(3));
        return geometric_counts(lo, hi, k);
    }
    std::vector<int> counts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        counts.push_back(parse_int("n", part));
    }
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
    if (counts.empty() || counts.front() < 1) {
        throw DomainError("--n: counts must be positive integers");
    }
    return counts;
}

int run_cli(const std::vector<std::string>& args) {
    try {
        CLI::App app{"delta-train detector observables"};
        app.require_subcommand(0, 1);

        std::map<std::string, std::string> cli_kv;
        std::string config_path;
        const auto capture = [&cli_kv](const std::string& key) {
            return [&cli_kv, key](const std::string& value) { cli_kv[key] = value; };
        };
        app.add_option_function<std::string>("--switching", capture("switching"),
                                             "switching profile: heaviside, gaussian, bump");
        app.add_option_function<std::string>("--q", capture("q"), "gaussian width parameter");
        app.add_option_function<std::string>("--gamma", capture("gamma"), "energy gap");
        app.add_option_function<std::string>("--s", capture("s"), "gaussian smearing scale");
        app.add_option_function<std::string>("--d", capture("d"), "detector separation");
        app.add_option_function<std::string>("--r", capture("r"), "hard-sphere radius");
        app.add_option_function<std::string>("--n", capture("n"),
                                             "kick counts: lo:hi:logK or comma list");
        app.add_option_function<std::string>("--tol", capture("tol"), "quadrature tolerance");
        app.add_option_function<std::string>("--out", capture("out"), "output directory");
        app.add_flag_callback("--plot", [&cli_kv] { cli_kv["plot"] = "true"; },
                              "emit SVG plots beside the CSVs");
        app.add_option("--config", config_path, "flat key = value config file");
        app.add_option_function<std::string>("--levels", capture("levels"),
                                             "dyadic refinement depth for rs-verify");

        CLI::App* cmd_single =
            app.add_subcommand("single", "single-detector excitation probability sweep");
        CLI::App* cmd_pair = app.add_subcommand("pair", "two-detector joint-state sweep");
        CLI::App* cmd_rs = app.add_subcommand("rs-verify", "integrator lemma battery");
        for (CLI::App* sub : {cmd_single, cmd_pair, cmd_rs}) {
            sub->fallthrough();
        }

        std::vector<const char*> argv;
        argv.push_back("dtrain");
        for (const std::string& arg : args) {
            argv.push_back(arg.c_str());
        }
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        Settings settings;
        if (!config_path.empty()) {
            settings.values = load_config(config_path);
        }
        for (const auto& [key, value] : cli_kv) {
            settings.values[key] = value;
        }

        std::string mode;
        if (cmd_single->parsed()) {
            mode = "single";
        } else if (cmd_pair->parsed()) {
            mode = "pair";
        } else if (cmd_rs->parsed()) {
            mode = "rs-verify";
        } else if (settings.has("mode")) {
            mode = settings.values.at("mode");
        }
        if (mode == "single") {
            return run_single(settings);
        }
        if (mode == "pair") {
            return run_pair(settings);
        }
        if (mode == "rs-verify") {
            return run_rs_verify(settings);
        }
        std::cerr << "error: no mode given (use single, pair or rs-verify)\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace dtrain::cli
