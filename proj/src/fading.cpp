#include "cislunar/fading.hpp"

#include <cmath>
#include <stdexcept>

namespace cislunar {

NakagamiParams::NakagamiParams(double m_, double omega_) : m(m_), omega(omega_) {
    if (!(m >= 0.5))
        throw std::invalid_argument("NakagamiParams: m must be >= 0.5");
    if (!(omega > 0.0))
        throw std::invalid_argument("NakagamiParams: omega must be > 0");
}

double nakagami_pdf(const NakagamiParams& p, double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("nakagami_pdf: x must be >= 0");
    // pow(0, 0) = 1 gives the correct m = 0.5 limit at x = 0.
    return 2.0 * std::pow(p.m / p.omega, p.m) / std::tgamma(p.m) *
           std::pow(x, 2.0 * p.m - 1.0) * std::exp(-p.m * x * x / p.omega);
}

double sample_h(const NakagamiParams& p, Rng& rng) {
    return std::sqrt(rng.gamma(p.m) * p.omega / p.m);
}

double alpha_moment(const NakagamiParams& p, double alpha) {
    return std::tgamma(p.m + 0.5 * alpha) / std::tgamma(p.m) *
           std::pow(p.omega / p.m, 0.5 * alpha);
}

double rician_to_m(double k_factor) {
    if (!(k_factor >= 0.0))
        throw std::invalid_argument("rician_to_m: K must be >= 0");
    return (k_factor + 1.0) * (k_factor + 1.0) / (2.0 * k_factor + 1.0);
}

}  // namespace cislunar
