#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cislunar/alpha_stable.hpp"
#include "cislunar/snr_model.hpp"

namespace cislunar {

struct McConfig {
    long n_samples = 1000000;
    std::uint64_t seed = 0xC15;
    double confidence_z = 3.0;
};

struct McEstimate {
    double value = 0.0;
    double se = 0.0;
    long n = 0;
};

// Monte-Carlo mean of (1/alpha) log2(1 + gamma) over fading draws.
McEstimate mc_ergodic(const SnrDistribution& dist, const McConfig& cfg);

// Empirical frequency of gamma < gamma_th with binomial standard error.
McEstimate mc_outage(const SnrDistribution& dist, double gamma_th, const McConfig& cfg);

// Empirical E|Re n| of the complex isotropic noise.  Heavy-tailed cases
// (alpha < 1.5) use a median-of-20-batches estimator.
McEstimate mc_noise_moments(const ComplexIsotropicNoise& noise, const McConfig& cfg);

struct ValidationCheck {
    std::string name;
    double expected;   // analytic value (or bound for dominance checks)
    double actual;     // sampled / computed counterpart
    double tolerance;  // allowed deviation (SE band or fixed)
    bool pass;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    int n_fail() const {
        int k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }
    bool all_pass() const { return n_fail() == 0; }
};

// Cross-checks every analytic quantity against its sampling counterpart:
// noise moments, empirical characteristic functions, SNR-law goodness of fit,
// ergodic means, and outage dominance.  Deterministic per seed.
ValidationReport run_validation(const McConfig& cfg = McConfig{});

}  // namespace cislunar
