#include "cislunar/capacity_bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cislunar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

// Index list {(iota + j)/rho : j = 0..rho-1}.
std::vector<double> index_list(int rho, double iota) {
    std::vector<double> v(rho);
    for (int j = 0; j < rho; ++j) v[j] = (iota + j) / rho;
    return v;
}

void append(std::vector<double>& dst, const std::vector<double>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

double capacity_lb(double ratio, double alpha) {
    if (!(ratio >= 0.0))
        throw std::invalid_argument("capacity_lb: ratio must be >= 0");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("capacity_lb: alpha must be in (1, 2]");
    return std::log2(1.0 + std::pow(ratio, alpha)) / alpha;
}

double ergodic_capacity_lb_quadrature(const SnrDistribution& dist) {
    if (dist.gamma_bar == 0.0) return 0.0;
    const double m = dist.fading.m;
    const double scale = dist.gamma_bar / dist.xi;
    const double alpha = dist.alpha;
    // Substituting u = (gamma xi / gamma_bar)^(2/alpha) makes the weight the
    // Gamma(m, 1/m) density: smooth, non-oscillatory, rapidly decaying.
    const double ln_c = m * std::log(m) - std::lgamma(m);
    double v = 1.0;
    int guard = 0;
    while (reg_upper_gamma(m, m * v) > 1e-14) {
        v *= 2.0;
        if (++guard > 100)
            throw std::runtime_error("ergodic_capacity_lb_quadrature: tail cutoff failed");
    }
    auto f = [&](double u) {
        if (u <= 0.0) return 0.0;
        return std::log2(1.0 + scale * std::pow(u, 0.5 * alpha)) *
               std::exp(ln_c + (m - 1.0) * std::log(u) - m * u);
    };
    // u^(alpha/2) has an unbounded derivative at the origin for alpha < 2, and
    // light fading weights (m <= 1) leave that corner exposed, starving the
    // adaptive rule.  Mapping u = t^(4/alpha) on the head segment turns the
    // kernel into the analytic log2(1 + scale t^2).
    const double q = 4.0 / alpha;
    auto head_f = [&](double t) {
        if (t <= 0.0) return 0.0;
        return f(std::pow(t, q)) * q * std::pow(t, q - 1.0);
    };
    QuadResult head = integrate_adaptive(head_f, 0.0, 1.0, 5e-10);
    QuadResult tail = integrate_adaptive(f, 1.0, v, 5e-10);
    if (!head.converged || !tail.converged)
        throw std::runtime_error(
            "ergodic_capacity_lb_quadrature: quadrature did not converge; achieved "
            "error estimate " +
            std::to_string(head.abs_err + tail.abs_err));
    return (head.value + tail.value) / alpha;
}

double ergodic_capacity_lb_meijerg(const SnrDistribution& dist, const RationalAlpha& ra) {
    const int l = ra.l;
    const int k = ra.k;
    if (l < 1 || k < 1 || std::fabs(dist.alpha * l - 2.0 * k) > 1e-9)
        throw std::invalid_argument("ergodic_capacity_lb_meijerg: l/k must equal 2/alpha");
    if (k + 4 * l > kMeijerOrderLimit)
        throw std::domain_error(
            "ergodic_capacity_lb_meijerg: G-function order " + std::to_string(k + 4 * l) +
            " exceeds the supported limit " + std::to_string(kMeijerOrderLimit) +
            "; use ergodic_capacity_lb_quadrature instead");
    if (dist.gamma_bar == 0.0) return 0.0;
    const double m = dist.fading.m;
    const double om = dist.fading.omega;

    MeijerGSpec spec;
    spec.a_front = index_list(l, 0.0);
    spec.a_rear = index_list(l, 1.0);
    spec.b_front = index_list(k, m);
    append(spec.b_front, index_list(l, 0.0));
    append(spec.b_front, index_list(l, 0.0));
    spec.z = std::pow(dist.xi / dist.gamma_bar, l) / std::pow(k * om / m, k);

    double pref = std::pow(om, m - 1.0) * l / (2.0 * kLn2 * std::tgamma(m)) *
                  std::sqrt(std::pow(k, 2.0 * m - 3.0) /
                            std::pow(2.0 * kPi, 2.0 * l + k - 3.0));
    return pref * meijer_g(spec);
}

double outage_ub(const SnrDistribution& dist, double gamma_th) {
    if (!(gamma_th > 0.0))
        throw std::invalid_argument("outage_ub: gamma_th must be > 0");
    if (dist.gamma_bar == 0.0) return 1.0;
    const double m = dist.fading.m;
    const double om = dist.fading.omega;
    return std::pow(om, m - 1.0) *
           reg_lower_gamma(m, (m / om) *
                                   std::pow(gamma_th * dist.xi / dist.gamma_bar, 2.0 / dist.alpha));
}

}  // namespace cislunar
