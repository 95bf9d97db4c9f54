#pragma once

#include <vector>

#include "cislunar/alpha_stable.hpp"
#include "cislunar/snr_model.hpp"

namespace cislunar {

// Discrete memoryless channel Y = h X + N on finite amplitude alphabets.
struct DiscreteChannel {
    std::vector<double> inputs;      // M_X amplitudes
    std::vector<double> outputs;     // M_N output points
    std::vector<double> transition;  // row-major M_X x M_N, rows sum to 1

    int mx() const { return static_cast<int>(inputs.size()); }
    int mn() const { return static_cast<int>(outputs.size()); }
    double p(int x, int y) const { return transition[static_cast<std::size_t>(x) * outputs.size() + y]; }
};

struct BaConfig {
    double epsilon = 1e-6;      // stop when the capacity increment falls below this (bpcu)
    int max_iter = 2000;
    double p_c = 1.0;           // amplitude constraint E|X| <= p_c
    int m_x = 65;               // input alphabet size (odd: includes 0)
    int m_n = 513;              // output alphabet size
    double x_max_factor = 4.0;  // input grid extent = factor * p_c
    int n_h = 40;               // fading grid points for the ergodic average
};

struct BaResult {
    double capacity = 0.0;  // bpcu
    std::vector<double> r;  // optimal input distribution
    double nu = 0.0;        // constraint multiplier at the last iteration
    int iterations = 0;
    bool converged = false;
    double last_increment = 0.0;
    bool monotone = true;   // capacity sequence nondecreasing throughout
};

struct FadingPoint {
    double h;       // fading amplitude
    double gamma;   // effective SNR at h
    double weight;  // renormalized f_gamma(gamma) * delta
};

struct FadingGrid {
    std::vector<FadingPoint> points;
    double raw_weight_sum = 0.0;  // quantile coverage before renormalization
};

struct ErgodicBaResult {
    double capacity = 0.0;  // weighted average bpcu
    FadingGrid grid;
    std::vector<double> per_point_capacity;
};

// Fading grid at n_h equally spaced SNR quantiles between 0.005 and 0.995,
// with interior-midpoint cell widths and weights renormalized to 1.
FadingGrid make_fading_grid(const SnrDistribution& dist, int n_h);

// Discretize Y = h X + N: symmetric input grid on [-x_max, x_max], output grid
// covering h*x_max plus the noise truncation radius, transition rows from the
// symmetric stable density, renormalized.
DiscreteChannel build_channel(double alpha, double lambda_n, double h, const BaConfig& cfg);
DiscreteChannel build_channel(double alpha, double lambda_n, double h, const BaConfig& cfg,
                              const SasPdfTable& table);

// Amplitude-constrained Blahut-Arimoto: alternating Q-update and exponentiated
// r-update with multiplier nu <= 0 enforcing E|X| <= constraint.
BaResult ba_capacity(const DiscreteChannel& ch, double constraint, const BaConfig& cfg);

// Outer Riemann-sum average of ba_capacity over the fading grid.
ErgodicBaResult ergodic_ba(double alpha, double lambda_n, const SnrDistribution& dist,
                           const BaConfig& cfg);

}  // namespace cislunar
