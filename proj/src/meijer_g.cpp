#include "cislunar/meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cislunar/special_functions.hpp"

namespace cislunar {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double meijer_g(const MeijerGSpec& spec) {
    int n = static_cast<int>(spec.a_front.size());
    int p = n + static_cast<int>(spec.a_rear.size());
    int m = static_cast<int>(spec.b_front.size());
    int q = m + static_cast<int>(spec.b_rear.size());
    if (p + q > kMeijerOrderLimit)
        throw std::domain_error("meijer_g: total order " + std::to_string(p + q) +
                                " exceeds the supported limit " +
                                std::to_string(kMeijerOrderLimit));
    if (!(spec.z > 0.0))
        throw std::invalid_argument("meijer_g: argument must be > 0");
    if (m == 0 && n == 0)
        throw std::invalid_argument("meijer_g: needs at least one front parameter");

    // Vertical contour between the ascending poles of the Gamma(1 - a_j + s)
    // family (rightmost at max a - 1) and the descending poles of the
    // Gamma(b_j - s) family (leftmost at min b).
    double c;
    if (n > 0 && m > 0) {
        double left = *std::max_element(spec.a_front.begin(), spec.a_front.end()) - 1.0;
        double right = *std::min_element(spec.b_front.begin(), spec.b_front.end());
        if (!(left < right))
            throw std::domain_error("meijer_g: pole families collide; no separating contour");
        c = 0.5 * (left + right);
    } else if (m > 0) {
        c = *std::min_element(spec.b_front.begin(), spec.b_front.end()) - 0.5;
    } else {
        c = *std::max_element(spec.a_front.begin(), spec.a_front.end()) - 1.0 + 0.5;
    }

    const double ln_z = std::log(spec.z);
    auto log_integrand = [&](double t) {
        std::complex<double> s(c, t);
        std::complex<double> acc = s * ln_z;
        for (double b : spec.b_front) acc += lgamma_complex(b - s);
        for (double a : spec.a_front) acc += lgamma_complex(1.0 - a + s);
        for (double b : spec.b_rear) acc -= lgamma_complex(1.0 - b + s);
        for (double a : spec.a_rear) acc -= lgamma_complex(a - s);
        return acc;
    };

    // Real parameters and z > 0 give a conjugate-symmetric integrand, so the
    // Mellin-Barnes integral reduces to (1/pi) Re Int_0^inf.  Normalize by the
    // t = 0 magnitude to keep exp() in range.
    const double l0 = log_integrand(0.0).real();
    const double width = 0.5;
    double total = 0.0;
    double peak = 0.0;
    bool decayed = false;
    for (int panel = 0; panel < 10000; ++panel) {
        double mid = (panel + 0.5) * width;
        double psum = 0.0;
        double pmax = 0.0;
        for (int i = 0; i < 32; ++i) {
            double t = mid + 0.5 * width * kGl32Nodes[i];
            std::complex<double> lg = log_integrand(t) - l0;
            double mag = std::exp(lg.real());
            pmax = std::max(pmax, mag);
            psum += kGl32Weights[i] * mag * std::cos(lg.imag());
        }
        total += psum * 0.5 * width;
        peak = std::max(peak, pmax);
        if (panel >= 2 && pmax < 1e-16 * peak) {
            decayed = true;
            break;
        }
    }
    if (!decayed)
        throw std::runtime_error("meijer_g: contour integrand failed to decay within the "
                                 "truncation window");
    return std::exp(l0) * total / kPi;
}

RationalAlpha rational_alpha(double alpha, int max_den) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("rational_alpha: alpha must be in (1, 2]");
    if (max_den < 1)
        throw std::invalid_argument("rational_alpha: max_den must be >= 1");
    for (int k = 1; k <= max_den; ++k) {
        double lr = 2.0 * k / alpha;
        int l = static_cast<int>(std::llround(lr));
        if (l >= 1 && std::fabs(lr - l) < 1e-9) {
            int g = std::gcd(l, k);
            return {l / g, k / g};
        }
    }
    throw std::domain_error("rational_alpha: no fraction l/k = 2/alpha with denominator <= " +
                            std::to_string(max_den));
}

}  // namespace cislunar
