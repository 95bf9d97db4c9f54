#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cislunar/capacity_bounds.hpp"
#include "cislunar/fading.hpp"
#include "cislunar/mc_oracle.hpp"
#include "cislunar/snr_model.hpp"

using namespace cislunar;

namespace {
McConfig cfg_of(long n, std::uint64_t seed = 0xC15) {
    McConfig cfg;
    cfg.n_samples = n;
    cfg.seed = seed;
    return cfg;
}
}  // namespace

TEST_CASE("ergodic sampling mean brackets the quadrature value") {
    SnrDistribution d(1.8, NakagamiParams(5.0), 50.0);
    McEstimate est = mc_ergodic(d, cfg_of(200000));
    CHECK(est.n == 200000);
    CHECK(est.se > 0.0);
    double want = ergodic_capacity_lb_quadrature(d);
    CHECK(std::abs(est.value - want) < 4.0 * est.se);
    // Degenerate case: zero SNR carries zero rate, exactly.
    McEstimate z = mc_ergodic(SnrDistribution(1.8, NakagamiParams(5.0), 0.0),
                              cfg_of(10000));
    CHECK(z.value == 0.0);
    CHECK(z.se == 0.0);
}

TEST_CASE("outage frequency brackets the distribution function") {
    SnrDistribution d(1.9, NakagamiParams(5.0), 100.0);
    McEstimate est = mc_outage(d, 50.0, cfg_of(200000));
    double p = d.cdf(50.0);
    CHECK(std::abs(est.value - p) < 4.0 * est.se);
    // Binomial standard error.
    CHECK(est.se ==
          doctest::Approx(std::sqrt(est.value * (1.0 - est.value) / 200000.0)).epsilon(1e-12));
    // A threshold far below any mass: empty event.
    McEstimate none = mc_outage(d, 1e-12, cfg_of(10000));
    CHECK(none.value == 0.0);
    CHECK_THROWS_AS(mc_outage(d, -1.0, cfg_of(10000)), std::invalid_argument);
}

TEST_CASE("noise moment estimate in the Gaussian limit") {
    // alpha = 2, sigma = 1/sqrt(2): Re n ~ N(0, 1/2), E|Re n| = sqrt(1/pi).
    ComplexIsotropicNoise noise = make_complex_noise(2.0, 1.0 / std::sqrt(2.0));
    McEstimate est = mc_noise_moments(noise, cfg_of(200000));
    CHECK(std::abs(est.value - 0.56418958354775628) < 4.0 * est.se);
}

TEST_CASE("estimates are deterministic per seed and move with it") {
    SnrDistribution d(1.8, NakagamiParams(1.0), 20.0);
    McEstimate a = mc_ergodic(d, cfg_of(50000, 7));
    McEstimate b = mc_ergodic(d, cfg_of(50000, 7));
    McEstimate c = mc_ergodic(d, cfg_of(50000, 8));
    CHECK(a.value == b.value);
    CHECK(a.se == b.se);
    CHECK(a.value != c.value);
}

TEST_CASE("sample-size floor") {
    SnrDistribution d(1.8, NakagamiParams(1.0), 20.0);
    CHECK_THROWS_AS(mc_ergodic(d, cfg_of(9999)), std::invalid_argument);
    McConfig bad = cfg_of(10000);
    bad.confidence_z = 0.0;
    CHECK_THROWS_AS(mc_ergodic(d, bad), std::invalid_argument);
}

TEST_CASE("full validation suite passes at a reduced sample size") {
    ValidationReport rep = run_validation(cfg_of(40000));
    CHECK(rep.checks.size() == 41);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CAPTURE(c.expected);
        CAPTURE(c.actual);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
    CHECK(rep.n_fail() == 0);
    // Spot checks: the suite covers every family it promises.
    auto has = [&](const std::string& name) {
        for (const auto& c : rep.checks)
            if (c.name == name) return true;
        return false;
    };
    CHECK(has("noise_mean_abs_re_a2.0"));
    CHECK(has("noise_mean_abs_re_a1.2"));
    CHECK(has("noise_mean_abs_sum_a1.8"));
    CHECK(has("noise_ecf_re_a1.8_t1.0"));
    CHECK(has("noise_ecf_sum_a2.0_t0.5"));
    CHECK(has("ks_cms_gaussian"));
    CHECK(has("ks_complex_re_a1.8"));
    CHECK(has("ks_complex_sum_a1.8"));
    CHECK(has("snr_gof_chi2_m1_a2.0"));
    CHECK(has("ergodic_mc_m1_a2.0"));
    CHECK(has("ergodic_mc_m15_a1.8"));
    CHECK(has("outage_dom_m5_a1.8_q0.10"));
}

TEST_CASE("a different seed moves the sampled side of the checks") {
    ValidationReport a = run_validation(cfg_of(40000, 0xC15));
    ValidationReport b = run_validation(cfg_of(40000, 0xBEEF));
    REQUIRE(a.checks.size() == b.checks.size());
    bool any_moved = false;
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].expected == b.checks[i].expected);
        if (a.checks[i].actual != b.checks[i].actual) any_moved = true;
    }
    CHECK(any_moved);
}
