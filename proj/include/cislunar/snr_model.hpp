#pragma once

#include "cislunar/fading.hpp"

namespace cislunar {

// Effective instantaneous SNR of the additive stable channel under an
// amplitude constraint: gamma = (P_c |h| pi / (2 lambda_n Gamma(1 - 1/alpha)))^alpha.
// At alpha = 2 this reduces to the usual P_c^2 |h|^2 pi / (4 lambda_n^2) form
// continuously.
double instantaneous_snr(double p_c, double h, double alpha, double lambda_n);

// Mean effective SNR over the fading: gamma_bar = xi * (P_c pi / (2 lambda_n Gamma(1-1/alpha)))^alpha.
double gamma_bar_from(double p_c, double alpha, double lambda_n,
                      const NakagamiParams& fading);

// Distribution of gamma induced by Nakagami-m fading.
struct SnrDistribution {
    double alpha;
    NakagamiParams fading;
    double gamma_bar;  // mean effective SNR
    double xi;         // E[|h|^alpha]

    SnrDistribution(double alpha_, const NakagamiParams& fading_, double gamma_bar_);

    static SnrDistribution from_physical(double p_c, double alpha, double lambda_n,
                                         const NakagamiParams& fading);

    // Density of gamma.  Integrates to Omega^(m-1); exactly normalized when
    // Omega = 1 (the analytic form carries that constant through).
    double pdf(double gamma) const;

    // P(gamma <= g) = P(m, (m/Omega) (g xi / gamma_bar)^(2/alpha)), the
    // regularized lower incomplete gamma.
    double cdf(double gamma) const;

    // Quantile: gamma_q with cdf(gamma_q) = q, q in [0, 1).
    double quantile(double q) const;
};

}  // namespace cislunar
