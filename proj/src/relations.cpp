#include "cledger/relations.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace cledger {

namespace {

struct RegistrySpec {
    const char* id;
    const char* description;
    const char* lhs;
    const char* rhs;
    double tolerance;
    DimensionPolicy policy;
    const char* waiver_note;
    const char* reference;
};

constexpr DimensionPolicy kStrict = DimensionPolicy::strict;
constexpr DimensionPolicy kWaived = DimensionPolicy::waived;

// Ids and default tolerances are fixed; expressions reference the default
// constants table. Tight tolerances mark derivational identities, loose
// ones the large-number coincidences.
const RegistrySpec kRegistry[] = {
    {"E1", "random-walk radius of the universe", "R_obs", "l_pi * sqrt(N)",
     1.5, kStrict, "", "Brownian random-walk relation R = l sqrt(N)"},
    {"E2", "age of the universe in Compton times", "T_obs", "tau_pi * sqrt(N)",
     1.0, kStrict, "", "T = tau sqrt(N), the pion Compton time scaled by sqrt(N)"},
    {"E3", "mass of the universe as N pions", "rho_obs * R_obs^3", "N * m_pi",
     2.5, kStrict, "", "M = N m, with M estimated as rho R^3"},
    {"E17", "gravitational vs electrostatic strength ratio", "e^2 / (G * m_pi^2)", "1e40",
     3.0, kStrict, "", "e^2/(G m^2) ~ 1e40, the large-number coincidence"},
    {"E21", "Fermi local weak coupling constant", "g2 / m_w^2", "1e-5 / m_p^2",
     2.0, kWaived, "stated in inverse gram squared; the coupling g2 is treated as a pure number",
     "G_w = g^2/m_w^2 ~ 1e-5/m_p^2"},
    {"E22", "gravitational self-energy radius", "R_obs", "G * N * m_pi / c^2",
     1.5, kStrict, "", "R = GM/c^2 balancing potential and rest energy"},
    {"E26", "pion mass from the Hubble constant", "H_obs", "G * m_pi^3 * c / (2 * hbar^2)",
     1.5, kStrict, "", "H = G m^3 c / (2 hbar^2), the Weinberg formula inverted"},
    {"E28", "radius from particle-number fluctuation", "R_obs", "sqrt(N) * l_pi",
     1.5, kStrict, "", "R = sqrt(N) l rederived from the sqrt(N) fluctuation"},
    {"E29", "sqrt(N) as the strength ratio", "sqrt(N)", "e^2 / (G * m_pi^2)",
     3.0, kStrict, "", "N1 = sqrt(N) = e^2/(G m^2) ~ 1e40"},
    {"E30", "gravitational fine structure", "G * m_pi / (l_pi * c^2)", "1 / sqrt(N)",
     1.5, kStrict, "", "Gm/(l c^2) = 1/sqrt(N), combining the radius relations"},
    {"E32", "Hubble constant from microphysics", "H_obs", "c / (l_pi * sqrt(N))",
     1.5, kStrict, "", "H = c/(l sqrt(N)) given the microphysical constants and N"},
    {"E33", "cosmic density from microphysics", "(m_pi / l_pi^3) / sqrt(N)", "rho_obs",
     3.0, kStrict, "", "rho = (m/l^3)/sqrt(N), a decreasing density"},
    {"E34", "Planck density coincidence", "rho_planck * l_pi^3", "N * m_pi",
     2.5, kStrict, "", "rho_P l^3 = M, the Planck-scale mass coincidence"},
    {"P1", "Planck masses in a Compton volume", "rho_planck * l_pi^3 / m_planck", "1e60",
     1.0, kStrict, "", "N' ~ 1e60 Planck masses in the volume l^3"},
    {"P2", "Planck lifetimes per Compton time", "tau_pi / tau_planck", "1e20",
     1.0, kStrict, "", "tau/tau_P ~ 1e20 Planck lifetimes in one Compton time"},
    {"P3", "total particle number from Planck counting",
     "(rho_planck * l_pi^3 / m_planck) * (tau_pi / tau_planck)", "1e80",
     1.0, kStrict, "", "N' tau/tau_P ~ 1e80, the total particle number"},
    {"E35", "neutrino-sector weak coupling", "g2_nu * sqrt(N_nu) * l_w^2", "m_nu * c^2",
     1.5, kWaived,
     "printed form is not dimensionally homogeneous; g2_nu carries the reading in which "
     "the product is an energy",
     "g^2 sqrt(N_nu) l_w^2 ~ m_nu c^2 from the neutrino-number fluctuation"},
    {"E35b", "numeric weak-coupling conclusion", "g2_nu * l_w^2", "1e-59",
     1.5, kWaived, "pure-number comparison of the printed conclusion g^2 l_w^2 ~ 1e-59",
     "g^2 l_w^2 ~ 1e-59, recovering the Fermi coupling estimate"},
    {"Z1", "fluctuation energy at the Compton scale", "(hbar * c / l_pi^4) * l_pi^3", "m_pi * c^2",
     0.5, kStrict, "", "zero-point fluctuation energy hbar c / l over a volume l^3 equals m c^2"},
    {"QM", "quark to electron mass ratio", "m_quark / m_e", "1e3",
     1.0, kStrict, "", "quark mass ~ 1e3 electron masses from the fractional charge"},
    {"RCT", "emergent light-speed relation", "R_obs", "c * T_obs",
     1.0, kStrict, "", "R = cT, the velocity of light emerging from the stochastic relations"},
};

Relation make_relation(const RegistrySpec& spec) {
    Relation r;
    r.id = spec.id;
    r.description = spec.description;
    r.lhs_src = spec.lhs;
    r.rhs_src = spec.rhs;
    r.lhs = parse_expression(spec.lhs);
    r.rhs = parse_expression(spec.rhs);
    r.tolerance_decades = spec.tolerance;
    r.policy = spec.policy;
    r.waiver_note = spec.waiver_note;
    r.reference = spec.reference;
    return r;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_value(const std::optional<Quantity>& q) {
    if (!q) return "n/a";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", q->magnitude());
    return buf;
}

std::string format_double(double v, const char* fmt = "%.4f") {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace

const std::vector<Relation>& builtin_registry() {
    static const std::vector<Relation> registry = [] {
        std::vector<Relation> out;
        for (const auto& spec : kRegistry) out.push_back(make_relation(spec));
        return out;
    }();
    return registry;
}

CheckResult check_relation(const Relation& relation, const ConstantsTable& table) {
    CheckResult result;
    result.id = relation.id;
    result.waived = relation.policy == DimensionPolicy::waived;
    result.tolerance_decades = relation.tolerance_decades;
    result.gap_decades = std::nan("");
    try {
        const Quantity lhs = eval_expression(relation.lhs, table);
        const Quantity rhs = eval_expression(relation.rhs, table);
        result.lhs_value = lhs;
        result.rhs_value = rhs;
        result.dimension_ok = lhs.dim() == rhs.dim();
        result.gap_decades = result.dimension_ok
                                 ? decade_gap(lhs, rhs)
                                 : decade_gap_magnitudes(lhs.magnitude(), rhs.magnitude());
        result.passed = (result.dimension_ok || result.waived) &&
                        result.gap_decades <= relation.tolerance_decades;
        if (!result.dimension_ok)
            result.notes = result.waived ? "dimension waived: " + relation.waiver_note
                                         : "dimension mismatch";
    } catch (const Error& err) {
        result.passed = false;
        result.notes = err.what();
    }
    return result;
}

Report run_relations(const std::vector<Relation>& registry, const ConstantsTable& table,
                     const std::vector<std::string>* filter,
                     const std::map<std::string, double>* tolerance_overrides) {
    const auto find_relation = [&](const std::string& id) -> const Relation* {
        for (const auto& r : registry)
            if (r.id == id) return &r;
        return nullptr;
    };
    if (filter)
        for (const auto& id : *filter)
            if (!find_relation(id)) throw Error("unknown filter id: " + id);
    if (tolerance_overrides)
        for (const auto& [id, tol] : *tolerance_overrides) {
            if (!find_relation(id)) throw Error("unknown relation id in override: " + id);
            if (!(tol > 0.0)) throw Error("tolerance override must be positive: " + id);
        }

    Report report;
    report.timestamp = utc_timestamp();
    report.constants_fingerprint = table.fingerprint();
    for (const auto& relation : registry) {
        if (filter) {
            bool selected = false;
            for (const auto& id : *filter) selected = selected || id == relation.id;
            if (!selected) continue;
        }
        Relation effective = relation;
        if (tolerance_overrides) {
            const auto it = tolerance_overrides->find(relation.id);
            if (it != tolerance_overrides->end()) effective.tolerance_decades = it->second;
        }
        report.results.push_back(check_relation(effective, table));
    }
    report.total = report.results.size();
    for (const auto& r : report.results) (r.passed ? report.passed : report.failed)++;
    return report;
}

Report run_registry(const ConstantsTable& table, const std::vector<std::string>* filter,
                    const std::map<std::string, double>* tolerance_overrides) {
    return run_relations(builtin_registry(), table, filter, tolerance_overrides);
}

std::vector<Relation> parse_relations(std::string_view text) {
    std::vector<Relation> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        const auto first = stripped.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = stripped.find_last_not_of(" \t\r");
        stripped = stripped.substr(first, last - first + 1);
        if (stripped.empty() || stripped[0] == '#') continue;

        const auto err = [&](const std::string& msg) -> Error {
            return Error("line " + std::to_string(line_no) + ": " + msg);
        };
        const auto colon = stripped.find(':');
        if (colon == std::string::npos) throw err("missing ':' after relation id");
        Relation r;
        r.id = stripped.substr(0, colon);
        std::string rest = stripped.substr(colon + 1);

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto semi = rest.find(';', start);
            fields.push_back(rest.substr(start, semi - start));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (fields.size() != 4) throw err("expected <lhs> ~ <rhs> ; tol=... ; dim=... ; ref=\"...\"");

        const auto tilde = fields[0].find('~');
        if (tilde == std::string::npos) throw err("missing '~' between expressions");
        r.lhs_src = fields[0].substr(0, tilde);
        r.rhs_src = fields[0].substr(tilde + 1);
        try {
            r.lhs = parse_expression(r.lhs_src);
            r.rhs = parse_expression(r.rhs_src);
        } catch (const Error& e) {
            throw err(e.what());
        }

        const auto field_value = [&](const std::string& field, const char* key) {
            const auto b = field.find_first_not_of(" \t");
            const std::string t = b == std::string::npos ? "" : field.substr(b);
            const std::string prefix = std::string(key) + "=";
            if (t.rfind(prefix, 0) != 0) throw err("expected " + prefix + "...");
            auto v = t.substr(prefix.size());
            const auto e = v.find_last_not_of(" \t");
            return e == std::string::npos ? "" : v.substr(0, e + 1);
        };
        try {
            r.tolerance_decades = std::stod(field_value(fields[1], "tol"));
        } catch (const std::exception&) {
            throw err("malformed tolerance");
        }
        if (!(r.tolerance_decades > 0.0)) throw err("tolerance must be positive");
        const std::string dim = field_value(fields[2], "dim");
        if (dim == "strict") r.policy = DimensionPolicy::strict;
        else if (dim == "waived") r.policy = DimensionPolicy::waived;
        else throw err("dim must be strict or waived");
        std::string ref = field_value(fields[3], "ref");
        if (ref.size() < 2 || ref.front() != '"' || ref.back() != '"')
            throw err("ref must be quoted");
        r.reference = ref.substr(1, ref.size() - 2);
        r.description = r.reference;
        if (r.policy == DimensionPolicy::waived)
            r.waiver_note = r.reference.empty() ? "waived by relation file" : r.reference;
        out.push_back(std::move(r));
    }
    return out;
}

std::string render_text(const Report& report) {
    std::string out;
    out += "relation check  " + report.timestamp +
           "  constants " + report.constants_fingerprint + "\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-6s %13s %13s %8s %6s %4s %-6s %s\n",
                  "id", "lhs", "rhs", "gap", "tol", "dim", "status", "notes");
    out += buf;
    for (const auto& r : report.results) {
        std::snprintf(buf, sizeof(buf), "%-6s %13s %13s %8s %6s %4s %-6s %s\n",
                      r.id.c_str(), format_value(r.lhs_value).c_str(),
                      format_value(r.rhs_value).c_str(),
                      format_double(r.gap_decades).c_str(),
                      format_double(r.tolerance_decades, "%.2f").c_str(),
                      r.dimension_ok ? "ok" : (r.waived ? "wvd" : "BAD"),
                      r.passed ? "pass" : "FAIL", r.notes.c_str());
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "summary: %zu total, %zu passed, %zu failed\n",
                  report.total, report.passed, report.failed);
    out += buf;
    return out;
}

std::string render_csv(const Report& report) {
    std::string out = "id,lhs,rhs,gap_decades,tolerance,dimension_ok,passed\n";
    for (const auto& r : report.results) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%s,%s,%s,%s\n", r.id.c_str(),
                      r.lhs_value ? format_double(r.lhs_value->magnitude(), "%.9g").c_str() : "nan",
                      r.rhs_value ? format_double(r.rhs_value->magnitude(), "%.9g").c_str() : "nan",
                      format_double(r.gap_decades, "%.6g").c_str(),
                      format_double(r.tolerance_decades, "%.6g").c_str(),
                      r.dimension_ok ? "true" : "false", r.passed ? "true" : "false");
        out += buf;
    }
    return out;
}

nlohmann::json render_json(const Report& report) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json item = {
            {"id", r.id},
            {"lhs", r.lhs_value ? nlohmann::json(r.lhs_value->magnitude()) : nlohmann::json()},
            {"rhs", r.rhs_value ? nlohmann::json(r.rhs_value->magnitude()) : nlohmann::json()},
            {"gap_decades",
             std::isnan(r.gap_decades) ? nlohmann::json() : nlohmann::json(r.gap_decades)},
            {"tolerance", r.tolerance_decades},
            {"dimension_ok", r.dimension_ok},
            {"waived", r.waived},
            {"passed", r.passed},
        };
        if (r.lhs_value) item["unit"] = r.lhs_value->dim().str();
        if (!r.notes.empty()) item["notes"] = r.notes;
        results.push_back(std::move(item));
    }
    return nlohmann::json{{"timestamp", report.timestamp},
                          {"constants_fingerprint", report.constants_fingerprint},
                          {"summary",
                           {{"total", report.total},
                            {"passed", report.passed},
                            {"failed", report.failed}}},
                          {"results", std::move(results)}};
}

} // namespace cledger
