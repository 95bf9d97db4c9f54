#pragma once

#include <array>
#include <complex>
#include <functional>

namespace cislunar {

// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a).
// Series for x < a+1, Lentz continued fraction otherwise; relative error <= 1e-12.
double reg_lower_gamma(double a, double x);

// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
double reg_upper_gamma(double a, double x);

// Non-regularized upper incomplete gamma Gamma(a,x).
double upper_gamma(double a, double x);

// Inverse of P(a,.) on [0,1): smallest x with P(a,x) = p.  Bisection on a
// doubled bracket; p outside (0,1) maps to the closed-form endpoints.
double inv_reg_lower_gamma(double a, double p);

// Principal-ish complex log-gamma (Lanczos g=7 with reflection for
// Re z < 0.5).  The imaginary part may differ from the principal branch by a
// multiple of 2*pi for large |Im z|; exp(lgamma_complex(z)) is always Gamma(z).
std::complex<double> lgamma_complex(std::complex<double> z);

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;  // accumulated error estimate
  bool converged = true;
  long evals = 0;
};

// Adaptive Simpson integration of f over [a,b] to absolute tolerance abs_tol.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth = 48);

// Gauss-Legendre nodes/weights on [-1,1].
extern const std::array<double, 16> kGl16Nodes;
extern const std::array<double, 16> kGl16Weights;
extern const std::array<double, 32> kGl32Nodes;
extern const std::array<double, 32> kGl32Weights;

}  // namespace cislunar
