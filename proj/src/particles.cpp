#include "cledger/particles.hpp"

#include "cledger/errors.hpp"

#include <cmath>

namespace cledger {

double qcd_potential(double r, const PotentialParams& params) {
    if (!(r > 0.0)) throw Error("radius must be positive");
    if (!(params.alpha > 0.0) || !(params.beta > 0.0))
        throw Error("potential parameters must be positive");
    return -params.alpha / r + params.beta * r;
}

double qcd_potential_cgs(double r_cm, const PotentialParams& params,
                         const ConstantsTable& table) {
    if (!(params.mass_scale > 0.0)) throw Error("mass_scale must be positive");
    const double hbar = table.get("hbar").magnitude();
    const double c = table.get("c").magnitude();
    const double natural_length = hbar / (params.mass_scale * c); // cm per natural unit
    const double natural_energy = params.mass_scale * c * c;      // erg per natural unit
    return qcd_potential(r_cm / natural_length, params) * natural_energy;
}

double crossover_radius(const PotentialParams& params) {
    if (!(params.alpha > 0.0) || !(params.beta > 0.0))
        throw Error("potential parameters must be positive");
    return std::sqrt(params.alpha / params.beta);
}

ChargeFraction charge_fraction(int dims) {
    if (dims < 1 || dims > 3)
        throw Error("dims out of range: " + std::to_string(dims));
    return {dims, Rational(dims, 3)};
}

QuarkMassEstimate quark_mass_estimate(const ConstantsTable& table) {
    const Quantity& e = table.get("e");
    const Quantity& hbar = table.get("hbar");
    const Quantity& c = table.get("c");
    const Quantity& m_e = table.get("m_e");
    QuarkMassEstimate out;
    out.mass = m_e * Quantity(1e3);
    out.alpha_fs_over_9 = (e * e / (hbar * c)).magnitude() / 9.0;
    out.ratio_to_electron = (out.mass / m_e).magnitude();
    return out;
}

WeakCouplingReport weak_coupling_check(const ConstantsTable& table) {
    for (const char* key : {"g2", "m_w", "l_w", "N_nu", "m_nu"})
        if (!table.contains(key)) throw Error(std::string("missing required key ") + key);
    const Quantity& n_nu = table.get("N_nu");
    if (n_nu.magnitude() == 0.0) throw Error("missing or zero N_nu");

    WeakCouplingReport report;
    const Quantity& m_w = table.get("m_w");
    report.fermi_coupling = table.get("g2") / (m_w * m_w);
    report.g2_lw2 = table.get("m_nu") * table.get("c").pow(Rational(2)) / n_nu.sqrt();

    const std::vector<std::string> ids = {"E21", "E35", "E35b"};
    report.checks = run_registry(table, &ids).results;
    return report;
}

Quantity zpf_energy(const Quantity& l, const ConstantsTable& table) {
    if (!(l.magnitude() > 0.0)) throw Error("length must be positive");
    if (l.dim() != Dimension::length()) throw Error("zpf_energy expects a length");
    return table.get("hbar") * table.get("c") / l;
}

} // namespace cledger
