#pragma once

#include "cislunar/rng.hpp"

namespace cislunar {

// Nakagami-m amplitude fading: |h|^2 ~ Gamma(m, Omega/m), E[|h|^2] = Omega.
struct NakagamiParams {
    double m;      // shape, >= 0.5
    double omega;  // mean square amplitude, > 0

    NakagamiParams(double m_, double omega_ = 1.0);
};

// Density of the amplitude |h| at x >= 0.
double nakagami_pdf(const NakagamiParams& p, double x);

// Draw an amplitude sample (sqrt of a Gamma(m, Omega/m) draw).
double sample_h(const NakagamiParams& p, Rng& rng);

// Fractional moment xi = E[|h|^alpha] = Gamma(m + alpha/2) / Gamma(m) * (Omega/m)^(alpha/2).
double alpha_moment(const NakagamiParams& p, double alpha);

// Nakagami shape matching a Rician K-factor: m = (K+1)^2 / (2K+1).
double rician_to_m(double k_factor);

}  // namespace cislunar
