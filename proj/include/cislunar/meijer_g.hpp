#pragma once

#include <vector>

namespace cislunar {

// Meijer G-function G^{m,n}_{p,q}(z | a; b) for real positive z, evaluated by
// numerical Mellin-Barnes contour integration on a vertical line.
//
//   a_front = a_1..a_n   (numerator Gamma(1 - a_j + s))
//   a_rear  = a_{n+1}..a_p (denominator Gamma(a_j - s))
//   b_front = b_1..b_m   (numerator Gamma(b_j - s))
//   b_rear  = b_{m+1}..b_q (denominator Gamma(1 - b_j + s))
struct MeijerGSpec {
    std::vector<double> a_front;
    std::vector<double> a_rear;
    std::vector<double> b_front;
    std::vector<double> b_rear;
    double z;
};

// Largest supported total order p + q.  Beyond this the oscillatory contour
// integrand loses too much precision in double arithmetic.
inline constexpr int kMeijerOrderLimit = 32;

double meijer_g(const MeijerGSpec& spec);

// Rational approximation l/k to 2/alpha with small denominator, used to cast
// the ergodic-capacity bound in closed form.  l/k = 2/alpha, gcd(l,k) = 1.
struct RationalAlpha {
    int l;
    int k;
};

RationalAlpha rational_alpha(double alpha, int max_den = 64);

}  // namespace cislunar
