#pragma once

#include "cislunar/meijer_g.hpp"
#include "cislunar/snr_model.hpp"
#include "cislunar/special_functions.hpp"

namespace cislunar {

// Capacity lower bound of the amplitude-constrained additive stable channel:
// C >= (1/alpha) log2(1 + ratio^alpha), ratio = P_c / E|N|.
double capacity_lb(double ratio, double alpha);

// Ergodic capacity lower bound (1/alpha) E[log2(1 + gamma)] over the fading
// SNR law, by adaptive quadrature to 1e-8 absolute.  This path is the
// authoritative value; the closed form below cross-validates it.
double ergodic_capacity_lb_quadrature(const SnrDistribution& dist);

// Same bound in closed form via a Meijer G-function of order determined by
// the rational representation l/k = 2/alpha.  Throws when the order exceeds
// kMeijerOrderLimit (use the quadrature path instead).
double ergodic_capacity_lb_meijerg(const SnrDistribution& dist, const RationalAlpha& ra);

// Outage probability upper bound P(gamma < gamma_th) <=
// Omega^(m-1) P(m, (m/Omega)(gamma_th xi / gamma_bar)^(2/alpha)); equals the
// SNR cdf when Omega = 1.
double outage_ub(const SnrDistribution& dist, double gamma_th);

}  // namespace cislunar
