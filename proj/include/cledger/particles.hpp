#pragma once

#include "cledger/constants.hpp"
#include "cledger/relations.hpp"

namespace cledger {

/// QCD-type potential parameters in natural units (hbar = c = 1):
/// alpha dimensionless, beta a mass squared. mass_scale (grams) defines
/// the natural unit for cgs conversion.
struct PotentialParams {
    double alpha = 1.0;
    double beta = 1.0;
    double mass_scale = 0.0;
};

/// V(r) = -alpha/r + beta r, natural units.
double qcd_potential(double r, const PotentialParams& params);

/// Same potential at a cgs radius, returned in erg.
double qcd_potential_cgs(double r_cm, const PotentialParams& params,
                         const ConstantsTable& table);

/// Radius where the Coulomb and confining terms balance: sqrt(alpha/beta).
double crossover_radius(const PotentialParams& params);

/// Fractional charge for a structure confined to 1..3 dimensions: dims/3 of e.
struct ChargeFraction {
    int dims = 3;
    Rational fraction{1, 1};
};
ChargeFraction charge_fraction(int dims);

struct QuarkMassEstimate {
    Quantity mass;                   // grams
    double alpha_fs_over_9 = 0.0;    // e^2/(hbar c)/9, the 1e-3 scale
    double ratio_to_electron = 0.0;  // 1e3 by construction
};
QuarkMassEstimate quark_mass_estimate(const ConstantsTable& table);

/// Weak-sector evaluation: the Fermi coupling g2/m_w^2 and the
/// neutrino-number conclusion g^2 l_w^2 = m_nu c^2 / sqrt(N_nu), together
/// with the registry results for E21, E35 and E35b.
struct WeakCouplingReport {
    Quantity fermi_coupling;
    Quantity g2_lw2;
    std::vector<CheckResult> checks;
};
WeakCouplingReport weak_coupling_check(const ConstantsTable& table);

/// Zero-point fluctuation energy hbar c / l in a region of size l.
Quantity zpf_energy(const Quantity& l, const ConstantsTable& table);

} // namespace cledger
