#include "cislunar/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cislunar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFpMin = 1e-300;

// Regularized lower incomplete gamma by power series; valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 2000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma by modified Lentz continued fraction;
// valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 2000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// log(sin(pi z)) without overflow for large |Im z|.  The imaginary part may
// differ from the principal branch by a multiple of 2*pi; exp() of the result
// is always sin(pi z).
std::complex<double> log_sin_pi(std::complex<double> z) {
    const std::complex<double> i2pi(0.0, 2.0 * kPi);
    const std::complex<double> half_i_pi(0.0, 0.5 * kPi );
    const double ln2 = 0.69314718055994530942;
    if (z.imag() >= 0.0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        return half_i_pi - ln2 - std::complex<double>(0.0, kPi) * z +
               std::log(1.0 - std::exp(i2pi * z));
    }
    // sin(pi z) = (-i/2) e^{i pi z} (1 - e^{-2 i pi z})
    return -half_i_pi - ln2 + std::complex<double>(0.0, kPi) * z +
           std::log(1.0 - std::exp(-i2pi * z));
}

// Lanczos g=7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

struct SimpsonState {
    const std::function<double(double)>* f;
    QuadResult qr;
};

double simpson_split(SimpsonState& st, double a, double fa, double b, double fb,
                     double m, double fm, double whole, double tol, int depth) {
    const auto& f = *st.f;
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    st.qr.evals += 2;
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::fabs(delta) > 15.0 * tol) st.qr.converged = false;
        st.qr.abs_err += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_split(st, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_split(st, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double reg_lower_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("reg_lower_gamma: a must be > 0");
    if (!(x >= 0.0)) throw std::invalid_argument("reg_lower_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double reg_upper_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("reg_upper_gamma: a must be > 0");
    if (!(x >= 0.0)) throw std::invalid_argument("reg_upper_gamma: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double upper_gamma(double a, double x) {
    return reg_upper_gamma(a, x) * std::exp(std::lgamma(a));
}

double inv_reg_lower_gamma(double a, double p) {
    if (!(a > 0.0)) throw std::invalid_argument("inv_reg_lower_gamma: a must be > 0");
    if (!(p >= 0.0 && p < 1.0))
        throw std::invalid_argument("inv_reg_lower_gamma: p must be in [0, 1)");
    if (p == 0.0) return 0.0;
    double hi = a > 1.0 ? a : 1.0;
    int guard = 0;
    while (reg_lower_gamma(a, hi) < p) {
        hi *= 2.0;
        if (++guard > 300) throw std::runtime_error("inv_reg_lower_gamma: bracket failed");
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (reg_lower_gamma(a, mid) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

std::complex<double> lgamma_complex(std::complex<double> z) {
    if (z.real() < 0.5) {
        // Reflection: lgamma(z) = log(pi) - log(sin(pi z)) - lgamma(1 - z).
        return std::log(kPi) - log_sin_pi(z) - lgamma_complex(1.0 - z);
    }
    std::complex<double> zz = z - 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zz + static_cast<double>(i));
    std::complex<double> t = zz + 7.5;
    return 0.91893853320467274178 /* log(sqrt(2 pi)) */ +
           (zz + 0.5) * std::log(t) - t + std::log(x);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth) {
    QuadResult qr;
    if (a == b) return qr;
    double fa = f(a);
    double fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    SimpsonState st{&f, qr};
    st.qr.evals = 3;
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double v = simpson_split(st, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
    st.qr.value = v;
    return st.qr;
}

const std::array<double, 16> kGl16Nodes = {
    -0.98940093499164993, -0.94457502307323258, -0.86563120238783174,
    -0.75540440835500303, -0.61787624440264375, -0.45801677765722739,
    -0.28160355077925891, -0.09501250983763744, 0.09501250983763744,
    0.28160355077925891,  0.45801677765722739,  0.61787624440264375,
    0.75540440835500303,  0.86563120238783174,  0.94457502307323258,
    0.98940093499164993,
};

const std::array<double, 16> kGl16Weights = {
    0.027152459411754095, 0.062253523938647893, 0.095158511682492785,
    0.12462897125553387,  0.14959598881657673,  0.16915651939500254,
    0.18260341504492359,  0.1894506104550685,   0.1894506104550685,
    0.18260341504492359,  0.16915651939500254,  0.14959598881657673,
    0.12462897125553387,  0.095158511682492785, 0.062253523938647893,
    0.027152459411754095,
};

const std::array<double, 32> kGl32Nodes = {
    -0.9972638618494816,   -0.9856115115452684,  -0.9647622555875064,
    -0.9349060759377397,   -0.8963211557660522,  -0.84936761373257,
    -0.7944837959679424,   -0.7321821187402897,  -0.6630442669302152,
    -0.5877157572407623,   -0.5068999089322294,  -0.42135127613063533,
    -0.33186860228212767,  -0.23928736225213706, -0.1444719615827965,
    -0.04830766568773831,  0.04830766568773831,  0.1444719615827965,
    0.23928736225213706,   0.33186860228212767,  0.42135127613063533,
    0.5068999089322294,    0.5877157572407623,   0.6630442669302152,
    0.7321821187402897,    0.7944837959679424,   0.84936761373257,
    0.8963211557660522,    0.9349060759377397,   0.9647622555875064,
    0.9856115115452684,    0.9972638618494816,
};

const std::array<double, 32> kGl32Weights = {
    0.007018610009469298,  0.016274394730905965, 0.025392065309262427,
    0.034273862913021626,  0.042835898022226426, 0.050998059262376244,
    0.058684093478535704,  0.06582222277636175,  0.07234579410884845,
    0.07819389578707031,   0.08331192422694685,  0.08765209300440391,
    0.09117387869576386,   0.09384439908080457,  0.09563872007927483,
    0.09654008851472781,   0.09654008851472781,  0.09563872007927483,
    0.09384439908080457,   0.09117387869576386,  0.08765209300440391,
    0.08331192422694685,   0.07819389578707031,  0.07234579410884845,
    0.06582222277636175,   0.058684093478535704, 0.050998059262376244,
    0.042835898022226426,  0.034273862913021626, 0.025392065309262427,
    0.016274394730905965,  0.007018610009469298,
};

}  // namespace cislunar
