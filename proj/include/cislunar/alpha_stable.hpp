#pragma once

#include <complex>
#include <vector>

#include "cislunar/rng.hpp"

namespace cislunar {

// Parameters of a stable law S(alpha, beta, lambda, mu) with characteristic
// function exp(j mu t - lambda^alpha |t|^alpha (1 - j beta sign(t) tan(pi alpha / 2))).
// alpha = 1 is excluded (the tan factor changes form there and the channel
// model never uses it).
struct StableParams {
    double alpha;
    double beta;
    double lambda;
    double mu;

    StableParams(double alpha_, double beta_, double lambda_, double mu_ = 0.0);
};

// Characteristic function E[exp(j t Z)].
std::complex<double> char_fn(const StableParams& p, double t);

// Density of the symmetric law S(alpha, 0, lambda, 0) at z, by quadrature of
// the cosine inversion integral.  Requires beta = 0, mu = 0.
double sas_pdf(const StableParams& p, double z);

// Sum of independent stable variables with common alpha and beta:
// lambda = (lambda1^alpha + lambda2^alpha)^(1/alpha), mu = mu1 + mu2.
StableParams sum_params(const StableParams& a, const StableParams& b);

// First absolute moment of S(alpha, 0, lambda, 0): 2 lambda Gamma(1 - 1/alpha) / pi,
// continuous at alpha = 2 where it equals 2 lambda / sqrt(pi).
double mean_abs(const StableParams& p);

// Chambers-Mallows-Stuck sampler.  Valid for the full parameter set accepted
// by StableParams; at alpha = 2 it degenerates to a Gaussian exactly.
class StableSampler {
  public:
    explicit StableSampler(const StableParams& p);
    double sample(Rng& rng) const;

  private:
    StableParams p_;
    double b_;      // atan(beta tan(pi alpha / 2)) / alpha
    double s_;      // (1 + beta^2 tan^2(pi alpha / 2))^(1 / (2 alpha))
};

double sample(const StableParams& p, Rng& rng);

// Complex isotropic stable noise n = sqrt(A1) G1 + j sqrt(A2) G2 with
// A_i ~ S(alpha/2, 1, [cos(pi alpha / 4)]^(2/alpha), 0) totally skewed and
// G_i ~ N(0, sigma^2).  Each quadrature Re(n), Im(n) is S(alpha, 0,
// sigma/sqrt(2), 0) (the subordinator scale cancels the secant of its Laplace
// transform); lambda_n = 2^(1/alpha - 1/2) sigma is the stable-sum scale of
// Re(n) + Im(n) and is the scale the channel model uses for its 1-D noise.
struct ComplexIsotropicNoise {
    double alpha;
    double sigma;
    double lambda_n;           // stable-sum scale 2^(1/alpha - 1/2) sigma
    StableParams subordinator; // law of A_i (alpha < 2); A_i = 1 when alpha = 2
};

ComplexIsotropicNoise make_complex_noise(double alpha, double sigma);

class ComplexNoiseSampler {
  public:
    explicit ComplexNoiseSampler(const ComplexIsotropicNoise& n);
    std::complex<double> sample(Rng& rng) const;

  private:
    ComplexIsotropicNoise n_;
    bool gaussian_;
};

// Dense table of the symmetric stable density on [0, z_max] with cubic
// (Catmull-Rom) interpolation and the asymptotic power tail beyond z_max.
// Built once and evaluated millions of times inside the discrete-channel
// capacity iteration.
class SasPdfTable {
  public:
    SasPdfTable(double alpha, double lambda, double z_max, int n_points = 4096);

    double operator()(double z) const;
    double z_max() const { return z_max_; }

  private:
    double alpha_;
    double lambda_;
    double z_max_;
    double dz_;
    double tail_coeff_;  // Gamma(alpha+1) sin(pi alpha / 2) lambda^alpha / pi
    std::vector<double> vals_;
};

// Radius R such that the noise contribution outside [-R, R] is negligible.
// For alpha < 2 the tail mass beyond R is `tail_mass`; for alpha = 2 the
// density at R has fallen to `density_floor`.
double noise_truncation_radius(double alpha, double lambda,
                               double tail_mass = 1e-4,
                               double density_floor = 1e-12);

}  // namespace cislunar
