#pragma once

#include "cledger/constants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cledger {

/// One instant of the simulated universe. All derived fields are recomputed
/// from N; they never drift independently.
struct CosmologyState {
    double t = 0.0;   // s
    double N = 1.0;   // particle count (continuous)
    double G = 0.0;   // cm^3 g^-1 s^-2
    double R = 0.0;   // cm
    double H = 0.0;   // s^-1
    double rho = 0.0; // g cm^-3
};

enum class SimMode { deterministic, stochastic };

struct SimulationConfig {
    double N0 = 1.0;
    double t_end = 0.0;           // s
    double dt = 0.0;              // s
    SimMode mode = SimMode::deterministic;
    std::uint64_t seed = 0;
    int ensemble_size = 1;
    int output_stride = 1;
};

struct TimeSeries {
    std::string fingerprint;              // config + constants hash
    std::vector<CosmologyState> samples;  // mean trajectory for ensembles
    std::vector<double> n_mean;           // per sample, ensembles only
    std::vector<double> n_std;
    bool ensemble = false;
};

/// Fluctuational creation rate dN/dt = sqrt(N)/tau.
double creation_rate(double N, double tau);

/// Exact integral of the creation law: N(t) = (sqrt(N0) + t/(2 tau))^2.
double closed_form_N(double t, double N0, double tau);

struct DerivedObservables {
    double G = 0.0, R = 0.0, H = 0.0, rho = 0.0;
};

/// G = l c^2/(m sqrt(N)), R = G N m / c^2, H = c/(l sqrt(N)),
/// rho = (m/l^3)/sqrt(N), with the pion scale from the table.
/// By construction R = l sqrt(N) exactly.
DerivedObservables derived_observables(double N, const ConstantsTable& table);

/// Integrates the creation law. Deterministic mode uses fixed-step RK4;
/// stochastic mode draws Poisson increments with mean sqrt(N) dt / tau,
/// one RNG stream per trajectory (seed + trajectory index). The result is
/// identical across reruns for a fixed config.
TimeSeries run_simulation(const SimulationConfig& cfg, const ConstantsTable& table);

struct LambdaSample {
    double t = 0.0;
    double lambda = 0.0;         // Rdotdot / R by central differences
    double lambda_over_H2 = 0.0;
};

/// Effective cosmological-constant estimate per interior sample.
std::vector<LambdaSample> lambda_estimate(const TimeSeries& ts);

struct TrendReport {
    double slope_G = 0.0;               // d log G / d log t over the final decade
    double slope_rho = 0.0;
    double max_hubble_residual = 0.0;   // max |Rdot - H R| / |H R|
    double max_rct_half_residual = 0.0; // max |R - c t / 2| / (c t / 2)
    double max_lambda_over_H2 = 0.0;    // max |lambda| / H^2, interior samples
    std::size_t fitted_samples = 0;
};

/// Log-log slope fits and residual checks over the final decade of samples.
/// Requires >= 10 samples spanning >= 2 decades of t.
TrendReport trend_checks(const TimeSeries& ts, const ConstantsTable& table);

} // namespace cledger
