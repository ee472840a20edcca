// comptonledger: order-of-magnitude relation checks, gamma-matrix
// verification and fluctuational-cosmology simulation from one CLI.

#include "cledger/algebra.hpp"
#include "cledger/constants.hpp"
#include "cledger/cosmology.hpp"
#include "cledger/particles.hpp"
#include "cledger/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cledger::Error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

cledger::ConstantsTable load_constants(const std::string& path_flag) {
    if (!path_flag.empty()) return cledger::ConstantsTable::parse(read_file(path_flag));
    if (const char* env = std::getenv("COMPTON_LEDGER_CONSTANTS"); env && *env)
        return cledger::ConstantsTable::parse(read_file(env));
    return cledger::ConstantsTable::builtin();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw cledger::Error("cannot open output file: " + out_path);
    out << text;
}

/// Parses "1e4" or "0.1tau"; tau values are resolved against the table.
double parse_time(const std::string& text, const cledger::ConstantsTable& table) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw cledger::Error("malformed time value: " + text);
    }
    std::string suffix = text.substr(used);
    if (suffix == "tau") return value * table.get("tau_pi").magnitude();
    if (!suffix.empty()) throw cledger::Error("unknown time suffix: " + suffix);
    return value;
}

std::map<std::string, double> parse_tolerance_overrides(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw cledger::Error("tolerance override must be ID=REAL: " + item);
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw cledger::Error("malformed tolerance override: " + item);
        }
    }
    return out;
}

std::string format_g(double v, int precision = 12) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

// ---------------------------------------------------------------- check

int run_check(const cledger::ConstantsTable& table, const std::vector<std::string>& rel_ids,
              const std::vector<std::string>& tol_items, const std::string& relations_path,
              const std::string& format, const std::string& out_path) {
    const auto overrides = parse_tolerance_overrides(tol_items);
    cledger::Report report;
    if (!relations_path.empty()) {
        const auto registry = cledger::parse_relations(read_file(relations_path));
        report = cledger::run_relations(registry, table, rel_ids.empty() ? nullptr : &rel_ids,
                                        overrides.empty() ? nullptr : &overrides);
    } else {
        report = cledger::run_registry(table, rel_ids.empty() ? nullptr : &rel_ids,
                                       overrides.empty() ? nullptr : &overrides);
    }
    if (format == "csv") write_output(out_path, cledger::render_csv(report));
    else if (format == "json") write_output(out_path, cledger::render_json(report).dump(2) + "\n");
    else write_output(out_path, cledger::render_text(report));
    return report.failed == 0 ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------- simulate

json series_json(const cledger::TimeSeries& ts) {
    json t = json::array(), n = json::array(), g = json::array(), r = json::array(),
         h = json::array(), rho = json::array();
    for (const auto& s : ts.samples) {
        t.push_back(s.t);
        n.push_back(s.N);
        g.push_back(s.G);
        r.push_back(s.R);
        h.push_back(s.H);
        rho.push_back(s.rho);
    }
    json out = {{"t", t}, {"N", n}, {"G", g}, {"R", r}, {"H", h}, {"rho", rho}};
    if (ts.ensemble) {
        out["N_mean"] = ts.n_mean;
        out["N_std"] = ts.n_std;
    }
    return out;
}

std::string series_csv(const cledger::TimeSeries& ts) {
    std::string out = ts.ensemble ? "t,N,G,R,H,rho,N_mean,N_std\n" : "t,N,G,R,H,rho\n";
    for (std::size_t i = 0; i < ts.samples.size(); ++i) {
        const auto& s = ts.samples[i];
        out += format_g(s.t) + "," + format_g(s.N) + "," + format_g(s.G) + "," +
               format_g(s.R) + "," + format_g(s.H) + "," + format_g(s.rho);
        if (ts.ensemble)
            out += "," + format_g(ts.n_mean[i]) + "," + format_g(ts.n_std[i]);
        out += "\n";
    }
    return out;
}

json trend_json(const cledger::TrendReport& trend) {
    return {{"slope_G_vs_t", trend.slope_G},
            {"slope_rho_vs_t", trend.slope_rho},
            {"max_hubble_residual", trend.max_hubble_residual},
            {"max_rct_half_residual", trend.max_rct_half_residual},
            {"max_lambda_over_H2", trend.max_lambda_over_H2},
            {"fitted_samples", trend.fitted_samples}};
}

json simulate_json(const cledger::SimulationConfig& cfg, const cledger::ConstantsTable& table,
                   const cledger::TimeSeries& ts) {
    json doc = {{"config",
                 {{"N0", cfg.N0},
                  {"t_end", cfg.t_end},
                  {"dt", cfg.dt},
                  {"mode", cfg.mode == cledger::SimMode::deterministic ? "deterministic"
                                                                       : "stochastic"},
                  {"seed", cfg.seed},
                  {"ensemble_size", cfg.ensemble_size},
                  {"output_stride", cfg.output_stride},
                  {"constants_fingerprint", table.fingerprint()},
                  {"series_fingerprint", ts.fingerprint}}},
                {"series", series_json(ts)}};
    try {
        doc["trend"] = trend_json(cledger::trend_checks(ts, table));
    } catch (const cledger::Error&) {
        // short runs have no trend section
    }
    return doc;
}

std::string simulate_text(const cledger::SimulationConfig& cfg,
                          const cledger::ConstantsTable& table,
                          const cledger::TimeSeries& ts) {
    const auto& last = ts.samples.back();
    std::string out;
    out += "simulation: " + std::to_string(ts.samples.size()) + " samples, mode " +
           (cfg.mode == cledger::SimMode::deterministic ? "deterministic" : "stochastic") +
           ", fingerprint " + ts.fingerprint + "\n";
    out += "final state: t=" + format_g(last.t, 6) + " s  N=" + format_g(last.N, 6) +
           "  G=" + format_g(last.G, 6) + "  R=" + format_g(last.R, 6) +
           "  H=" + format_g(last.H, 6) + "  rho=" + format_g(last.rho, 6) + "\n";
    try {
        const auto trend = cledger::trend_checks(ts, table);
        out += "trend: slope(G)=" + format_g(trend.slope_G, 4) +
               " slope(rho)=" + format_g(trend.slope_rho, 4) +
               " |Rdot-HR|/HR<=" + format_g(trend.max_hubble_residual, 4) +
               " |R-ct/2| rel<=" + format_g(trend.max_rct_half_residual, 4) +
               " |lambda|/H^2<=" + format_g(trend.max_lambda_over_H2, 4) + "\n";
    } catch (const cledger::Error&) {
    }
    return out;
}

// -------------------------------------------------------------- algebra

json clifford_json() {
    json sets = json::array();
    for (const auto& set : {cledger::build_dirac_set(), cledger::build_eq9_set()}) {
        const auto report = cledger::verify_clifford(set);
        json pairs = json::array();
        for (const auto& p : report.pairs)
            pairs.push_back({{"a", p.a}, {"b", p.b}, {"deviation", p.deviation}});
        sets.push_back({{"set", report.label},
                        {"pairs", pairs},
                        {"max_deviation", report.max_deviation},
                        {"inferred_signature", report.inferred_signature},
                        {"matches_declared", report.matches_declared}});
    }
    return sets;
}

json snyder_json(const cledger::ConstantsTable& table) {
    const double hbar = table.get("hbar").magnitude();
    const double p = table.get("m_pi").magnitude() * table.get("c").magnitude();
    const double compton = hbar / p;
    json rows = json::array();
    for (double scale : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0}) {
        const double a = scale == 0.0 ? compton * 1e-12 : compton * scale;
        rows.push_back({{"a_over_l", scale},
                        {"factor", cledger::snyder_deformation(p, a, hbar)}});
    }
    return {{"compton_factor", cledger::snyder_deformation(p, compton, hbar)},
            {"samples", rows}};
}

struct OnshellSummary {
    double max_residual = 0.0;
    int bad_nullspace = 0;
    int trials = 0;
};

OnshellSummary onshell_sweep(const cledger::ConstantsTable& table, int trials,
                             std::uint64_t seed) {
    const double c = table.get("c").magnitude();
    const double m = table.get("m_pi").magnitude();
    const double mc = m * c;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_mag(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    OnshellSummary out;
    out.trials = trials;
    for (int i = 0; i < trials; ++i) {
        const double mag = mc * std::pow(10.0, log_mag(rng));
        double v[3] = {unit(rng), unit(rng), unit(rng)};
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) + 1e-300;
        for (double& x : v) x *= mag / norm;
        const bool on_shell = i % 2 == 0;
        cledger::FourMomentum p{0.0, v[0], v[1], v[2]};
        p.p0 = on_shell ? std::sqrt(mag * mag + mc * mc)
                        : std::sqrt(mag * mag + mc * mc) * (1.0 + 0.5 + unit(rng) * 0.4);
        const double p2 = p.p0 * p.p0 - mag * mag;
        const double expected = (p2 * c * c - mc * mc * c * c) * (p2 * c * c - mc * mc * c * c);
        const double det = cledger::onshell_determinant(p, m, c).real();
        const double scale = std::max(mc * c, std::max(std::abs(p.p0), mag) * c);
        const double scale4 = scale * scale * scale * scale;
        const double residual = std::abs(det - expected) / std::max(std::abs(expected), scale4);
        out.max_residual = std::max(out.max_residual, residual);
        const int nullity = cledger::nullspace_dimension(p, m, c, 1e-8 * mc * c);
        if (nullity != (on_shell ? 2 : 0)) ++out.bad_nullspace;
    }
    return out;
}

int run_algebra(const cledger::ConstantsTable& table, std::vector<std::string> suites,
                int trials, std::uint64_t seed, const std::string& format,
                const std::string& out_path) {
    if (suites.empty()) suites = {"clifford", "onshell", "snyder"};
    for (const auto& s : suites)
        if (s != "clifford" && s != "onshell" && s != "snyder")
            throw cledger::Error("unknown suite name: " + s);

    json doc;
    std::string text;
    bool ok = true;
    for (const auto& suite : suites) {
        if (suite == "clifford") {
            const json sets = clifford_json();
            doc["clifford"] = sets;
            for (const auto& set : sets) {
                ok = ok && set["max_deviation"].get<double>() == 0.0;
                std::string sig;
                for (const int s : set["inferred_signature"].get<std::vector<int>>())
                    sig += s > 0 ? "+" : "-";
                text += "clifford " + set["set"].get<std::string>() + ": max deviation " +
                        format_g(set["max_deviation"].get<double>(), 6) + ", signature (" +
                        sig + ")\n";
            }
        } else if (suite == "snyder") {
            const json s = snyder_json(table);
            doc["snyder"] = s;
            text += "snyder: deformation factor at Compton parameters = " +
                    format_g(s["compton_factor"].get<double>(), 17) + "\n";
            ok = ok && s["compton_factor"].get<double>() == 2.0;
        } else {
            const OnshellSummary s = onshell_sweep(table, trials, seed);
            doc["onshell"] = {{"trials", s.trials},
                              {"max_relative_residual", s.max_residual},
                              {"bad_nullspace_count", s.bad_nullspace}};
            text += "onshell: " + std::to_string(s.trials) + " trials, max relative residual " +
                    format_g(s.max_residual, 6) + ", nullspace mismatches " +
                    std::to_string(s.bad_nullspace) + "\n";
            ok = ok && s.max_residual <= 1e-9 && s.bad_nullspace == 0;
        }
    }
    if (format == "json") write_output(out_path, doc.dump(2) + "\n");
    else write_output(out_path, text);
    return ok ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------ constants

int run_constants(const cledger::ConstantsTable& table, const std::string& format,
                  const std::string& out_path) {
    if (format == "json") {
        json entries = json::array();
        for (const auto& e : table.entries()) {
            json item = {{"name", e.name},
                         {"magnitude", e.value.magnitude()},
                         {"unit", e.value.dim().str()},
                         {"provenance", cledger::provenance_name(e.provenance)},
                         {"note", e.note}};
            if (!e.derived_from.empty()) item["derived_from"] = e.derived_from;
            entries.push_back(std::move(item));
        }
        write_output(out_path,
                     json{{"fingerprint", table.fingerprint()}, {"entries", entries}}.dump(2) +
                         "\n");
    } else {
        write_output(out_path, table.serialize());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine and simulator for Compton-scale "
                 "large-number cosmology relations"};
    app.require_subcommand(1);

    std::string constants_path, format = "text", out_path, relations_path;
    std::vector<std::string> rel_ids, tol_items, suites;
    std::string dt_text = "0.1tau", t_end_text, steps_text, n0_text = "1";
    std::string mode_text = "deterministic";
    int ensemble = 1, stride = 1, trials = 1000;
    std::uint64_t seed = 0;
    bool seed_given = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--constants", constants_path, "constants file path");
        cmd->add_option("--format", format, "output format: text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", out_path, "output path (default: stdout)");
    };

    CLI::App* check = app.add_subcommand("check", "run the relation registry");
    add_common(check);
    check->add_option("--rel", rel_ids, "relation ids to run")->delimiter(',');
    check->add_option("--tol", tol_items, "tolerance overrides ID=REAL")->delimiter(',');
    check->add_option("--relations", relations_path, "user relation file instead of built-ins");

    CLI::App* simulate = app.add_subcommand("simulate", "integrate the particle-creation law");
    add_common(simulate);
    simulate->add_option("--n0", n0_text, "initial particle count");
    simulate->add_option("--dt", dt_text, "time step, optionally with tau suffix");
    simulate->add_option("--t-end", t_end_text, "end time, optionally with tau suffix");
    simulate->add_option("--steps", steps_text, "number of steps (alternative to --t-end)");
    simulate->add_option("--mode", mode_text, "deterministic|stochastic")
        ->check(CLI::IsMember({"deterministic", "stochastic"}));
    simulate->add_option("--ensemble", ensemble, "trajectory count for stochastic mode");
    CLI::Option* seed_opt = simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--stride", stride, "output stride in steps");

    CLI::App* algebra = app.add_subcommand("algebra", "matrix-algebra verification suites");
    add_common(algebra);
    algebra->add_option("--suite", suites, "clifford,onshell,snyder")->delimiter(',');
    algebra->add_option("--trials", trials, "random momenta for the onshell suite");
    algebra->add_option("--seed", seed, "RNG seed for the onshell suite");

    CLI::App* constants_cmd = app.add_subcommand("constants", "print the validated table");
    add_common(constants_cmd);

    CLI::App* report = app.add_subcommand("report", "check + algebra + short simulation");
    add_common(report);
    bool potential_table = false;
    double pot_alpha = 1.0, pot_beta = 1.0, pot_rmax = 4.0;
    int pot_points = 0;
    report->add_flag("--potential", potential_table,
                     "print a V(r) table (r,V_natural,V_cgs) instead of the full report");
    report->add_option("--alpha", pot_alpha, "Coulomb coefficient of the potential");
    report->add_option("--beta", pot_beta, "confining coefficient (natural units)");
    report->add_option("--r-max", pot_rmax, "largest radius in natural units");
    report->add_option("--points", pot_points, "table rows (default 32)");
    report->add_option("--trials", trials, "random momenta for the onshell section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }
    seed_given = seed_opt->count() > 0;

    try {
        const cledger::ConstantsTable table = load_constants(constants_path);

        if (check->parsed())
            return run_check(table, rel_ids, tol_items, relations_path, format, out_path);

        if (simulate->parsed()) {
            cledger::SimulationConfig cfg;
            cfg.N0 = std::stod(n0_text);
            cfg.dt = parse_time(dt_text, table);
            if (!t_end_text.empty()) cfg.t_end = parse_time(t_end_text, table);
            else if (!steps_text.empty()) cfg.t_end = std::stod(steps_text) * cfg.dt;
            else cfg.t_end = 1e4 * table.get("tau_pi").magnitude();
            cfg.mode = mode_text == "stochastic" ? cledger::SimMode::stochastic
                                                 : cledger::SimMode::deterministic;
            cfg.ensemble_size = ensemble;
            cfg.seed = seed;
            cfg.output_stride = stride;
            if (cfg.mode == cledger::SimMode::stochastic && !seed_given)
                throw cledger::Error("stochastic mode requires --seed");
            const cledger::TimeSeries ts = cledger::run_simulation(cfg, table);
            if (format == "csv") write_output(out_path, series_csv(ts));
            else if (format == "json")
                write_output(out_path, simulate_json(cfg, table, ts).dump(2) + "\n");
            else write_output(out_path, simulate_text(cfg, table, ts));
            return kExitOk;
        }

        if (algebra->parsed())
            return run_algebra(table, suites, trials, seed, format, out_path);

        if (constants_cmd->parsed()) return run_constants(table, format, out_path);

        if (report->parsed() && potential_table) {
            cledger::PotentialParams params;
            params.alpha = pot_alpha;
            params.beta = pot_beta;
            params.mass_scale = table.get("m_pi").magnitude();
            const int points = pot_points > 0 ? pot_points : 32;
            const double natural_length = table.get("hbar").magnitude() /
                                          (params.mass_scale * table.get("c").magnitude());
            std::string csv = "r,V_natural,V_cgs\n";
            for (int i = 1; i <= points; ++i) {
                const double r = pot_rmax * i / points;
                csv += format_g(r) + "," + format_g(cledger::qcd_potential(r, params)) + "," +
                       format_g(cledger::qcd_potential_cgs(r * natural_length, params, table)) +
                       "\n";
            }
            write_output(out_path, csv);
            return kExitOk;
        }

        if (report->parsed()) {
            const cledger::Report check_report = cledger::run_registry(table);
            cledger::SimulationConfig cfg;
            cfg.N0 = 1.0;
            cfg.dt = 0.1 * table.get("tau_pi").magnitude();
            cfg.t_end = 1e4 * table.get("tau_pi").magnitude();
            cfg.output_stride = 100;
            const cledger::TimeSeries ts = cledger::run_simulation(cfg, table);
            const OnshellSummary onshell = onshell_sweep(table, trials, seed);
            const bool algebra_ok = onshell.max_residual <= 1e-9 && onshell.bad_nullspace == 0;

            if (format == "json") {
                json doc = {{"check", cledger::render_json(check_report)},
                            {"algebra",
                             {{"clifford", clifford_json()},
                              {"snyder", snyder_json(table)},
                              {"onshell",
                               {{"trials", onshell.trials},
                                {"max_relative_residual", onshell.max_residual},
                                {"bad_nullspace_count", onshell.bad_nullspace}}}}},
                            {"simulate", simulate_json(cfg, table, ts)}};
                write_output(out_path, doc.dump(2) + "\n");
            } else {
                std::string text = cledger::render_text(check_report);
                text += "\n";
                for (const auto& set : {cledger::build_dirac_set(), cledger::build_eq9_set()}) {
                    const auto r = cledger::verify_clifford(set);
                    std::string sig;
                    for (const int s : r.inferred_signature) sig += s > 0 ? "+" : "-";
                    text += "clifford " + r.label + ": max deviation " +
                            format_g(r.max_deviation, 6) + ", signature (" + sig + ")\n";
                }
                text += "onshell: max relative residual " + format_g(onshell.max_residual, 6) +
                        " over " + std::to_string(onshell.trials) + " trials\n";
                text += "\n" + simulate_text(cfg, table, ts);
                write_output(out_path, text);
            }
            return (check_report.failed == 0 && algebra_ok) ? kExitOk : kExitCheckFailed;
        }
        return kExitError;
    } catch (const cledger::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
