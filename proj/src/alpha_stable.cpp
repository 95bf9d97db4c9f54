#include "cislunar/alpha_stable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cislunar/special_functions.hpp"

namespace cislunar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn10 = 2.30258509299404568402;

// Envelope truncation for the cosine inversion integral in standardized
// (lambda = 1) coordinates: exp(-T^alpha) < 1e-36.
double trunc_point(double alpha) { return std::pow(36.0 * kLn10, 1.0 / alpha); }

double gl16_panel(double a, double b, double alpha, double u) {
    double half = 0.5 * (b - a);
    double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) {
        double s = mid + half * kGl16Nodes[i];
        acc += kGl16Weights[i] * std::exp(-std::pow(s, alpha)) * std::cos(s * u);
    }
    return acc * half;
}

// Standardized symmetric stable density at u >= 0 for scale 1:
// (1/pi) Int_0^T exp(-s^alpha) cos(s u) ds.
double sas_pdf_std(double alpha, double u) {
    double t_max = trunc_point(alpha);
    double total = 0.0;
    if (u > 10.0) {
        // Integrate between consecutive zeros of cos(s u): alternating panels
        // of width pi/u keep each Gauss-Legendre rule on a half oscillation.
        double a = 0.0;
        long k = 0;
        while (a < t_max) {
            double b = std::min((static_cast<double>(k) + 0.5) * kPi / u, t_max);
            total += gl16_panel(a, b, alpha, u);
            a = b;
            ++k;
        }
    } else {
        int n = static_cast<int>(std::ceil(t_max * (u + 1.0) / 2.0));
        n = std::clamp(n, 32, 4096);
        double w = t_max / n;
        for (int i = 0; i < n; ++i) total += gl16_panel(i * w, (i + 1) * w, alpha, u);
    }
    return total / kPi;
}

}  // namespace

StableParams::StableParams(double alpha_, double beta_, double lambda_, double mu_)
    : alpha(alpha_), beta(beta_), lambda(lambda_), mu(mu_) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("StableParams: alpha must be in (0, 2]");
    if (alpha == 1.0)
        throw std::invalid_argument("StableParams: alpha = 1 is unsupported");
    if (!(std::fabs(beta) <= 1.0))
        throw std::invalid_argument("StableParams: beta must be in [-1, 1]");
    if (!(lambda > 0.0))
        throw std::invalid_argument("StableParams: scale must be > 0");
    if (!std::isfinite(mu))
        throw std::invalid_argument("StableParams: mu must be finite");
    if (alpha == 2.0) beta = 0.0;  // skewness is vacuous in the Gaussian case
}

std::complex<double> char_fn(const StableParams& p, double t) {
    double at = std::pow(p.lambda * std::fabs(t), p.alpha);
    double sgn = (t > 0.0) ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
    double skew = p.beta * sgn * std::tan(0.5 * kPi * p.alpha);
    return std::exp(std::complex<double>(-at, p.mu * t + at * skew));
}

double sas_pdf(const StableParams& p, double z) {
    if (!(p.alpha > 1.0))
        throw std::invalid_argument("sas_pdf: alpha must be in (1, 2]");
    if (p.beta != 0.0 || p.mu != 0.0)
        throw std::invalid_argument("sas_pdf: only the symmetric centered law is supported");
    if (!std::isfinite(z))
        throw std::invalid_argument("sas_pdf: z must be finite");
    return sas_pdf_std(p.alpha, std::fabs(z) / p.lambda) / p.lambda;
}

StableParams sum_params(const StableParams& a, const StableParams& b) {
    if (a.alpha != b.alpha)
        throw std::invalid_argument("sum_params: mismatched alpha");
    double la = std::pow(a.lambda, a.alpha);
    double lb = std::pow(b.lambda, b.alpha);
    double beta = (a.beta * la + b.beta * lb) / (la + lb);
    double lambda = std::pow(la + lb, 1.0 / a.alpha);
    return StableParams(a.alpha, beta, lambda, a.mu + b.mu);
}

double mean_abs(const StableParams& p) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("mean_abs: first absolute moment diverges for alpha <= 1");
    return 2.0 * p.lambda * std::tgamma(1.0 - 1.0 / p.alpha) / kPi;
}

StableSampler::StableSampler(const StableParams& p) : p_(p) {
    double tn = std::tan(0.5 * kPi * p_.alpha);
    b_ = std::atan(p_.beta * tn) / p_.alpha;
    s_ = std::pow(1.0 + p_.beta * p_.beta * tn * tn, 0.5 / p_.alpha);
}

double StableSampler::sample(Rng& rng) const {
    double u = kPi * (rng.uniform_open() - 0.5);  // uniform on (-pi/2, pi/2)
    double w = rng.exponential();
    double aub = p_.alpha * (u + b_);
    double x = s_ * std::sin(aub) / std::pow(std::cos(u), 1.0 / p_.alpha) *
               std::pow(std::cos(u - aub) / w, (1.0 - p_.alpha) / p_.alpha);
    return p_.lambda * x + p_.mu;
}

double sample(const StableParams& p, Rng& rng) { return StableSampler(p).sample(rng); }

ComplexIsotropicNoise make_complex_noise(double alpha, double sigma) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("make_complex_noise: alpha must be in (1, 2]");
    if (!(sigma > 0.0))
        throw std::invalid_argument("make_complex_noise: sigma must be > 0");
    double lambda_n = std::pow(2.0, 1.0 / alpha - 0.5) * sigma;
    if (alpha == 2.0)
        // Subordinator degenerates to the constant 1; the stored law is unused.
        return {alpha, sigma, lambda_n, StableParams(2.0, 0.0, 1.0, 0.0)};
    double scale = std::pow(std::cos(0.25 * kPi * alpha), 2.0 / alpha);
    return {alpha, sigma, lambda_n, StableParams(0.5 * alpha, 1.0, scale, 0.0)};
}

ComplexNoiseSampler::ComplexNoiseSampler(const ComplexIsotropicNoise& n)
    : n_(n), gaussian_(n.alpha == 2.0) {}

std::complex<double> ComplexNoiseSampler::sample(Rng& rng) const {
    if (gaussian_)
        return {n_.sigma * rng.normal(), n_.sigma * rng.normal()};
    StableSampler sub(n_.subordinator);
    double a1 = sub.sample(rng);
    double a2 = sub.sample(rng);
    return {std::sqrt(a1) * n_.sigma * rng.normal(),
            std::sqrt(a2) * n_.sigma * rng.normal()};
}

SasPdfTable::SasPdfTable(double alpha, double lambda, double z_max, int n_points)
    : alpha_(alpha), lambda_(lambda), z_max_(z_max) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("SasPdfTable: alpha must be in (1, 2]");
    if (!(lambda > 0.0) || !(z_max > 0.0))
        throw std::invalid_argument("SasPdfTable: scale and z_max must be > 0");
    if (n_points < 16)
        throw std::invalid_argument("SasPdfTable: n_points too small");
    dz_ = z_max / (n_points - 1);
    tail_coeff_ = (alpha == 2.0)
                      ? 0.0
                      : std::tgamma(alpha + 1.0) * std::sin(0.5 * kPi * alpha) *
                            std::pow(lambda, alpha) / kPi;

    // One shared Gauss-Legendre node set over [0, T] resolves cos(s u) for
    // every tabulated u; panel count scales with the largest phase T*u_max.
    double u_max = z_max / lambda;
    double t_max = trunc_point(alpha);
    int n_panels = static_cast<int>(std::ceil(t_max * u_max / 8.0));
    n_panels = std::clamp(n_panels, 64, 8000);
    double w = t_max / n_panels;
    std::vector<double> nodes(static_cast<std::size_t>(n_panels) * 16);
    std::vector<double> env(nodes.size());
    for (int pnl = 0; pnl < n_panels; ++pnl) {
        double mid = (pnl + 0.5) * w;
        for (int i = 0; i < 16; ++i) {
            std::size_t j = static_cast<std::size_t>(pnl) * 16 + i;
            double s = mid + 0.5 * w * kGl16Nodes[i];
            nodes[j] = s;
            env[j] = kGl16Weights[i] * 0.5 * w * std::exp(-std::pow(s, alpha)) / kPi;
        }
    }
    vals_.resize(n_points);
    for (int i = 0; i < n_points; ++i) {
        double u = i * dz_ / lambda;
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) acc += env[j] * std::cos(nodes[j] * u);
        vals_[i] = acc / lambda;
    }
}

double SasPdfTable::operator()(double z) const {
    z = std::fabs(z);
    if (z >= z_max_) return tail_coeff_ * std::pow(z, -alpha_ - 1.0);
    double x = z / dz_;
    auto n = static_cast<long>(vals_.size());
    long i = static_cast<long>(x);
    if (i > n - 2) i = n - 2;
    double s = x - i;
    // Catmull-Rom stencil; the left ghost uses even symmetry, the right ghost
    // the asymptotic tail.
    double f0 = (i >= 1) ? vals_[i - 1] : vals_[1];
    double f1 = vals_[i];
    double f2 = vals_[i + 1];
    double f3 = (i + 2 <= n - 1) ? vals_[i + 2]
                                 : tail_coeff_ * std::pow(z_max_ + dz_, -alpha_ - 1.0);
    double a0 = -0.5 * f0 + 1.5 * f1 - 1.5 * f2 + 0.5 * f3;
    double a1 = f0 - 2.5 * f1 + 2.0 * f2 - 0.5 * f3;
    double a2 = -0.5 * f0 + 0.5 * f2;
    double v = ((a0 * s + a1) * s + a2) * s + f1;
    return v > 0.0 ? v : 0.0;
}

double noise_truncation_radius(double alpha, double lambda, double tail_mass,
                               double density_floor) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("noise_truncation_radius: alpha must be in (1, 2]");
    if (!(lambda > 0.0))
        throw std::invalid_argument("noise_truncation_radius: scale must be > 0");
    if (alpha == 2.0) {
        double sg = lambda * std::sqrt(2.0);  // Gaussian standard deviation
        double arg = -2.0 * std::log(density_floor * sg * std::sqrt(2.0 * kPi));
        return sg * std::sqrt(std::max(arg, 1.0));
    }
    double c = std::tgamma(alpha + 1.0) * std::sin(0.5 * kPi * alpha) *
               std::pow(lambda, alpha) / kPi;
    return std::pow(2.0 * c / (alpha * tail_mass), 1.0 / alpha);
}

}  // namespace cislunar
