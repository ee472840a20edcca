#include "cledger/cosmology.hpp"

#include "cledger/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace cledger {

double creation_rate(double N, double tau) {
    if (N < 0.0) throw Error("negative particle count");
    if (!(tau > 0.0)) throw Error("tau must be positive");
    return std::sqrt(N) / tau;
}

double closed_form_N(double t, double N0, double tau) {
    if (t < 0.0) throw Error("negative time");
    if (N0 < 0.0) throw Error("negative particle count");
    if (!(tau > 0.0)) throw Error("tau must be positive");
    const double root = std::sqrt(N0) + t / (2.0 * tau);
    return root * root;
}

DerivedObservables derived_observables(double N, const ConstantsTable& table) {
    if (!(N >= 1.0)) throw Error("particle count must be >= 1");
    const double l = table.get("l_pi").magnitude();
    const double m = table.get("m_pi").magnitude();
    const double c = table.get("c").magnitude();
    const double sqrt_n = std::sqrt(N);
    DerivedObservables out;
    out.G = l * c * c / (m * sqrt_n);
    out.R = out.G * (N * m) / (c * c); // reduces to l sqrt(N) exactly
    out.H = c / (l * sqrt_n);
    out.rho = (m / (l * l * l)) / sqrt_n;
    return out;
}

namespace {

void validate(const SimulationConfig& cfg, double tau) {
    if (!(cfg.dt > 0.0)) throw Error("dt must be positive");
    if (!(cfg.t_end > 0.0)) throw Error("t_end must be positive");
    if (cfg.ensemble_size < 1) throw Error("ensemble size must be >= 1");
    if (cfg.output_stride < 1) throw Error("output stride must be >= 1");
    if (!(cfg.N0 >= 1.0)) throw Error("N0 must be >= 1");
    if (cfg.dt > tau) throw Error("step exceeds Compton time");
}

double rk4_step(double N, double dt, double tau) {
    const auto f = [tau](double n) { return std::sqrt(std::max(n, 0.0)) / tau; };
    const double k1 = f(N);
    const double k2 = f(N + 0.5 * dt * k1);
    const double k3 = f(N + 0.5 * dt * k2);
    const double k4 = f(N + dt * k3);
    return N + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::string config_fingerprint(const SimulationConfig& cfg, const ConstantsTable& table) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "N0=%.17g;t_end=%.17g;dt=%.17g;mode=%d;seed=%llu;"
                                    "ensemble=%d;stride=%d;constants=%s",
                  cfg.N0, cfg.t_end, cfg.dt, static_cast<int>(cfg.mode),
                  static_cast<unsigned long long>(cfg.seed), cfg.ensemble_size,
                  cfg.output_stride, table.fingerprint().c_str());
    return content_hash(buf);
}

} // namespace

TimeSeries run_simulation(const SimulationConfig& cfg, const ConstantsTable& table) {
    const double tau = table.get("tau_pi").magnitude();
    validate(cfg, tau);

    const std::size_t n_steps = static_cast<std::size_t>(std::floor(cfg.t_end / cfg.dt + 1e-9));
    const std::size_t stride = static_cast<std::size_t>(cfg.output_stride);
    const std::size_t n_samples = n_steps / stride + 1;

    TimeSeries ts;
    ts.fingerprint = config_fingerprint(cfg, table);
    ts.ensemble = cfg.mode == SimMode::stochastic && cfg.ensemble_size > 1;

    if (cfg.mode == SimMode::deterministic) {
        double N = cfg.N0;
        for (std::size_t step = 0; step <= n_steps; ++step) {
            if (step % stride == 0) {
                const DerivedObservables d = derived_observables(N, table);
                ts.samples.push_back({step * cfg.dt, N, d.G, d.R, d.H, d.rho});
            }
            if (step < n_steps) N = rk4_step(N, cfg.dt, tau);
        }
        return ts;
    }

    // Stochastic: independent RNG stream per trajectory, ordered reduction,
    // so the result does not depend on how trajectories are scheduled.
    std::vector<double> sum(n_samples, 0.0);
    std::vector<double> sum_sq(n_samples, 0.0);
    for (int traj = 0; traj < cfg.ensemble_size; ++traj) {
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(traj));
        double N = std::floor(cfg.N0);
        std::size_t sample = 0;
        for (std::size_t step = 0; step <= n_steps; ++step) {
            if (step % stride == 0) {
                sum[sample] += N;
                sum_sq[sample] += N * N;
                ++sample;
            }
            if (step < n_steps) {
                const double mean = std::sqrt(N) * cfg.dt / tau;
                std::poisson_distribution<long> jump(mean);
                N += static_cast<double>(jump(rng));
            }
        }
    }
    ts.n_mean.resize(n_samples);
    ts.n_std.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double mean = sum[i] / cfg.ensemble_size;
        const double var = std::max(0.0, sum_sq[i] / cfg.ensemble_size - mean * mean);
        ts.n_mean[i] = mean;
        ts.n_std[i] = std::sqrt(var);
        const DerivedObservables d = derived_observables(std::max(mean, 1.0), table);
        ts.samples.push_back({static_cast<double>(i * stride) * cfg.dt, mean,
                              d.G, d.R, d.H, d.rho});
    }
    if (!ts.ensemble) {
        // single stochastic trajectory: keep mean/std arrays empty
        ts.n_mean.clear();
        ts.n_std.clear();
    }
    return ts;
}

std::vector<LambdaSample> lambda_estimate(const TimeSeries& ts) {
    if (ts.samples.size() < 3) throw Error("too few samples for lambda estimate");
    std::vector<LambdaSample> out;
    for (std::size_t i = 1; i + 1 < ts.samples.size(); ++i) {
        const auto& prev = ts.samples[i - 1];
        const auto& cur = ts.samples[i];
        const auto& next = ts.samples[i + 1];
        const double h1 = cur.t - prev.t;
        const double h2 = next.t - cur.t;
        // central second difference, uniform spacing expected
        const double rdd = (next.R - 2.0 * cur.R + prev.R) / (0.5 * (h1 + h2) * h1);
        const double lambda = rdd / cur.R;
        out.push_back({cur.t, lambda, lambda / (cur.H * cur.H)});
    }
    return out;
}

TrendReport trend_checks(const TimeSeries& ts, const ConstantsTable& table) {
    const auto& s = ts.samples;
    if (s.size() < 10) throw Error("insufficient span: need at least 10 samples");
    double t_first = 0.0;
    for (const auto& st : s)
        if (st.t > 0.0) { t_first = st.t; break; }
    const double t_last = s.back().t;
    if (!(t_first > 0.0) || t_last / t_first < 100.0)
        throw Error("insufficient span: need >= 2 decades of t");

    const double c = table.get("c").magnitude();
    const double t_cut = t_last / 10.0;

    // least-squares slope of log10(y) vs log10(t) over the final decade
    const auto slope = [&](auto field) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t n = 0;
        for (const auto& st : s) {
            if (st.t < t_cut) continue;
            const double x = std::log10(st.t);
            const double y = std::log10(field(st));
            sx += x; sy += y; sxx += x * x; sxy += x * y; ++n;
        }
        if (n < 2) throw Error("insufficient span in final decade");
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };

    TrendReport report;
    report.slope_G = slope([](const CosmologyState& st) { return st.G; });
    report.slope_rho = slope([](const CosmologyState& st) { return st.rho; });

    std::size_t fitted = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i].t < t_cut) continue;
        ++fitted;
        const double rdot = (s[i + 1].R - s[i - 1].R) / (s[i + 1].t - s[i - 1].t);
        const double hr = s[i].H * s[i].R;
        report.max_hubble_residual =
            std::max(report.max_hubble_residual, std::fabs(rdot - hr) / std::fabs(hr));
        const double rct2 = c * s[i].t / 2.0;
        report.max_rct_half_residual =
            std::max(report.max_rct_half_residual, std::fabs(s[i].R - rct2) / rct2);
    }
    report.fitted_samples = fitted;

    for (const auto& l : lambda_estimate(ts))
        report.max_lambda_over_H2 =
            std::max(report.max_lambda_over_H2, std::fabs(l.lambda_over_H2));
    return report;
}

} // namespace cledger
