#include "cislunar/snr_model.hpp"

#include <cmath>
#include <stdexcept>

#include "cislunar/special_functions.hpp"

namespace cislunar {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Amplitude-domain SNR ratio P_c |h| pi / (2 lambda_n Gamma(1 - 1/alpha)).
double snr_ratio(double p_c, double h, double alpha, double lambda_n) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("instantaneous_snr: alpha must be in (1, 2]");
    if (!(p_c >= 0.0) || !(h >= 0.0))
        throw std::invalid_argument("instantaneous_snr: amplitudes must be >= 0");
    if (!(lambda_n > 0.0))
        throw std::invalid_argument("instantaneous_snr: lambda_n must be > 0");
    return p_c * h * kPi / (2.0 * lambda_n * std::tgamma(1.0 - 1.0 / alpha));
}
}  // namespace

double instantaneous_snr(double p_c, double h, double alpha, double lambda_n) {
    return std::pow(snr_ratio(p_c, h, alpha, lambda_n), alpha);
}

double gamma_bar_from(double p_c, double alpha, double lambda_n,
                      const NakagamiParams& fading) {
    return alpha_moment(fading, alpha) *
           std::pow(snr_ratio(p_c, 1.0, alpha, lambda_n), alpha);
}

SnrDistribution::SnrDistribution(double alpha_, const NakagamiParams& fading_,
                                 double gamma_bar_)
    : alpha(alpha_), fading(fading_), gamma_bar(gamma_bar_) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("SnrDistribution: alpha must be in (1, 2]");
    if (!(gamma_bar >= 0.0))
        throw std::invalid_argument("SnrDistribution: gamma_bar must be >= 0");
    if (std::fabs(fading.omega - 1.0) > 1e-12)
        throw std::invalid_argument("SnrDistribution: requires omega = 1 (the analytic "
                                    "law is only normalized there)");
    xi = alpha_moment(fading, alpha);
}

SnrDistribution SnrDistribution::from_physical(double p_c, double alpha, double lambda_n,
                                               const NakagamiParams& fading) {
    return SnrDistribution(alpha, fading, gamma_bar_from(p_c, alpha, lambda_n, fading));
}

double SnrDistribution::pdf(double gamma) const {
    if (!(gamma > 0.0))
        throw std::invalid_argument("snr_pdf: gamma must be > 0");
    if (!(gamma_bar > 0.0))
        throw std::domain_error("snr_pdf: degenerate distribution (gamma_bar = 0)");
    double m = fading.m;
    double om = fading.omega;
    double t = gamma * xi / gamma_bar;
    return 2.0 * std::pow(m, m) / (om * alpha * std::tgamma(m) * gamma) *
           std::exp(-(m / om) * std::pow(t, 2.0 / alpha)) *
           std::pow(t, 2.0 * m / alpha);
}

double SnrDistribution::cdf(double gamma) const {
    if (gamma <= 0.0) return 0.0;
    if (!(gamma_bar > 0.0)) return 1.0;
    double m = fading.m;
    return reg_lower_gamma(
        m, (m / fading.omega) * std::pow(gamma * xi / gamma_bar, 2.0 / alpha));
}

double SnrDistribution::quantile(double q) const {
    if (!(q >= 0.0 && q < 1.0))
        throw std::invalid_argument("snr quantile: q must be in [0, 1)");
    if (!(gamma_bar > 0.0))
        throw std::domain_error("snr quantile: degenerate distribution (gamma_bar = 0)");
    double m = fading.m;
    double u = fading.omega * inv_reg_lower_gamma(m, q) / m;
    return (gamma_bar / xi) * std::pow(u, 0.5 * alpha);
}

}  // namespace cislunar
