#include "cledger/cosmology.hpp"

#include <doctest.h>

#include <cmath>

using namespace cledger;

namespace {

const ConstantsTable& table() {
    static const ConstantsTable t = ConstantsTable::builtin();
    return t;
}

double tau() { return table().get("tau_pi").magnitude(); }

} // namespace

TEST_CASE("creation rate and closed form") {
    CHECK(creation_rate(1e80, tau()) == doctest::Approx(2.120440518095058e63).epsilon(1e-12));
    CHECK(creation_rate(0.0, tau()) == 0.0);
    CHECK_THROWS_AS(creation_rate(-1.0, tau()), Error);
    CHECK_THROWS_AS(creation_rate(1.0, 0.0), Error);

    CHECK(closed_form_N(0.0, 1.0, tau()) == 1.0);
    CHECK(closed_form_N(2.0 * tau(), 1.0, tau()) == doctest::Approx(4.0));
    // d/dt of the closed form is sqrt(N)/tau: check by finite difference
    const double t0 = 100.0 * tau(), h = 1e-4 * tau();
    const double deriv = (closed_form_N(t0 + h, 1.0, tau()) -
                          closed_form_N(t0 - h, 1.0, tau())) / (2.0 * h);
    CHECK(deriv ==
          doctest::Approx(creation_rate(closed_form_N(t0, 1.0, tau()), tau())).epsilon(1e-9));
}

TEST_CASE("derived observables at the present epoch") {
    const DerivedObservables d = derived_observables(1e80, table());
    CHECK(d.G == doctest::Approx(5.1071094498952955e-8).epsilon(1e-12));
    CHECK(d.H == doctest::Approx(2.120440518095058e-17).epsilon(1e-12));
    CHECK(d.R == doctest::Approx(table().get("l_pi").magnitude() * 1e40).epsilon(1e-14));
    CHECK(d.rho == doctest::Approx(table().get("m_pi").magnitude() /
                                   std::pow(table().get("l_pi").magnitude(), 3) / 1e40)
                       .epsilon(1e-12));
    CHECK_THROWS_WITH_AS(derived_observables(0.5, table()),
                         doctest::Contains("particle count must be >= 1"), Error);
}

TEST_CASE("deterministic integration matches the closed form") {
    SimulationConfig cfg;
    cfg.N0 = 1.0;
    cfg.dt = tau() / 10.0;
    cfg.t_end = 1e3 * tau();
    const TimeSeries ts = run_simulation(cfg, table());
    REQUIRE(ts.samples.size() == 10001);
    CHECK_FALSE(ts.ensemble);
    CHECK(ts.samples.front().N == 1.0);
    const double expected = closed_form_N(cfg.t_end, cfg.N0, tau());
    CHECK(std::fabs(ts.samples.back().N - expected) / expected < 1e-8);
    // R never drifts from l sqrt(N)
    const double l = table().get("l_pi").magnitude();
    for (std::size_t i = 0; i < ts.samples.size(); i += 1000) {
        const auto& s = ts.samples[i];
        CHECK(std::fabs(s.R - l * std::sqrt(s.N)) <= 1e-14 * s.R);
    }
}

TEST_CASE("output stride controls the sample count") {
    SimulationConfig cfg;
    cfg.N0 = 1.0;
    cfg.dt = tau();
    cfg.t_end = 100.0 * tau();
    cfg.output_stride = 7;
    const TimeSeries ts = run_simulation(cfg, table());
    CHECK(ts.samples.size() == 100 / 7 + 1);
    CHECK(ts.samples[1].t == doctest::Approx(7.0 * tau()));
}

TEST_CASE("configuration guards") {
    SimulationConfig cfg;
    cfg.N0 = 1.0;
    cfg.dt = 2.0 * tau();
    cfg.t_end = 10.0 * tau();
    CHECK_THROWS_WITH_AS(run_simulation(cfg, table()),
                         doctest::Contains("step exceeds Compton time"), Error);
    cfg.dt = 0.0;
    CHECK_THROWS_AS(run_simulation(cfg, table()), Error);
    cfg.dt = tau();
    cfg.N0 = 0.5;
    CHECK_THROWS_AS(run_simulation(cfg, table()), Error);
    cfg.N0 = 1.0;
    cfg.ensemble_size = 0;
    CHECK_THROWS_AS(run_simulation(cfg, table()), Error);
}

TEST_CASE("stochastic runs are reproducible and non-decreasing") {
    SimulationConfig cfg;
    cfg.N0 = 100.0;
    cfg.dt = 0.5 * tau();
    cfg.t_end = 200.0 * tau();
    cfg.mode = SimMode::stochastic;
    cfg.seed = 42;
    cfg.ensemble_size = 32;
    const TimeSeries a = run_simulation(cfg, table());
    const TimeSeries b = run_simulation(cfg, table());
    CHECK(a.ensemble);
    REQUIRE(a.n_mean.size() == a.samples.size());
    CHECK(a.fingerprint == b.fingerprint);
    for (std::size_t i = 0; i < a.n_mean.size(); ++i) {
        CHECK(a.n_mean[i] == b.n_mean[i]); // bit-identical
        CHECK(a.n_std[i] == b.n_std[i]);
        if (i > 0) CHECK(a.n_mean[i] >= a.n_mean[i - 1]);
    }

    cfg.seed = 43;
    const TimeSeries c = run_simulation(cfg, table());
    CHECK(c.fingerprint != a.fingerprint);
    CHECK(c.n_mean.back() != a.n_mean.back());

    cfg.seed = 42;
    cfg.ensemble_size = 1;
    const TimeSeries single = run_simulation(cfg, table());
    CHECK_FALSE(single.ensemble);
    CHECK(single.n_mean.empty());
}

TEST_CASE("fingerprint tracks config and constants") {
    SimulationConfig cfg;
    cfg.N0 = 1.0;
    cfg.dt = tau();
    cfg.t_end = 10.0 * tau();
    const std::string base = run_simulation(cfg, table()).fingerprint;
    cfg.dt = tau() / 2.0;
    CHECK(run_simulation(cfg, table()).fingerprint != base);
}

TEST_CASE("trend checks on a long deterministic run") {
    SimulationConfig cfg;
    cfg.N0 = 1.0;
    cfg.dt = tau() / 2.0;
    cfg.t_end = 1e4 * tau();
    cfg.output_stride = 20;
    const TimeSeries ts = run_simulation(cfg, table());
    const TrendReport trend = trend_checks(ts, table());
    // G and rho both fall off as 1/t
    CHECK(trend.slope_G == doctest::Approx(-1.0).epsilon(0.05));
    CHECK(trend.slope_rho == doctest::Approx(-1.0).epsilon(0.05));
    // R grows at c/2 while H R = c: the residual sits at one half
    CHECK(trend.max_hubble_residual == doctest::Approx(0.5).epsilon(0.02));
    // R tracks c t / 2 closely over the final decade
    CHECK(trend.max_rct_half_residual < 0.01);
    // effective cosmological constant is negligible against H^2
    CHECK(trend.max_lambda_over_H2 <= 10.0);
    CHECK(trend.fitted_samples > 0);
}

TEST_CASE("lambda estimate and span guards") {
    SimulationConfig cfg;
    cfg.N0 = 1.0;
    cfg.dt = tau();
    cfg.t_end = 3.0 * tau();
    const TimeSeries short_run = run_simulation(cfg, table());
    CHECK_THROWS_WITH_AS(trend_checks(short_run, table()),
                         doctest::Contains("insufficient span"), Error);

    cfg.t_end = 20.0 * tau(); // 21 samples but only ~1.3 decades
    CHECK_THROWS_WITH_AS(trend_checks(run_simulation(cfg, table()), table()),
                         doctest::Contains("insufficient span"), Error);

    cfg.t_end = 1e3 * tau();
    const auto lambdas = lambda_estimate(run_simulation(cfg, table()));
    CHECK(lambdas.size() == 999);
    for (const auto& l : lambdas) CHECK(std::fabs(l.lambda_over_H2) <= 10.0);

    TimeSeries tiny;
    tiny.samples.resize(2);
    CHECK_THROWS_WITH_AS(lambda_estimate(tiny), doctest::Contains("too few samples"), Error);
}
