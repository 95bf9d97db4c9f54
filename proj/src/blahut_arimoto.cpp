#include "cislunar/blahut_arimoto.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace cislunar {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void validate(const BaConfig& cfg) {
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("BaConfig: epsilon must be > 0");
    if (cfg.max_iter < 1) throw std::invalid_argument("BaConfig: max_iter must be >= 1");
    if (!(cfg.p_c > 0.0)) throw std::invalid_argument("BaConfig: p_c must be > 0");
    if (cfg.m_x < 3 || cfg.m_n < 3)
        throw std::invalid_argument("BaConfig: alphabet sizes must be >= 3");
    if (!(cfg.x_max_factor > 0.0))
        throw std::invalid_argument("BaConfig: x_max_factor must be > 0");
    if (cfg.n_h < 1) throw std::invalid_argument("BaConfig: n_h must be >= 1");
}

}  // namespace

FadingGrid make_fading_grid(const SnrDistribution& dist, int n_h) {
    if (n_h < 1) throw std::invalid_argument("make_fading_grid: n_h must be >= 1");
    if (!(dist.gamma_bar > 0.0))
        throw std::invalid_argument("make_fading_grid: gamma_bar must be > 0");
    const double inv_alpha = 1.0 / dist.alpha;
    FadingGrid grid;
    if (n_h == 1) {
        // Degenerate grid: the median carries all the weight.
        double g = dist.quantile(0.5);
        grid.points.push_back({std::pow(g * dist.xi / dist.gamma_bar, inv_alpha), g, 1.0});
        grid.raw_weight_sum = 1.0;
        return grid;
    }
    const double q_lo = 0.005, q_hi = 0.995;
    std::vector<double> g(n_h), f(n_h);
    for (int i = 0; i < n_h; ++i) {
        double q = q_lo + (q_hi - q_lo) * i / (n_h - 1);
        g[i] = dist.quantile(q);
        f[i] = dist.pdf(g[i]);
    }
    // Interior-midpoint cells; the end cells stop at the outer quantiles so no
    // width is attributed to the unbounded tails.
    std::vector<double> edges(static_cast<std::size_t>(n_h) + 1);
    edges[0] = g[0];
    edges[n_h] = g[n_h - 1];
    for (int i = 1; i < n_h; ++i) edges[i] = 0.5 * (g[i - 1] + g[i]);
    grid.points.resize(n_h);
    double raw = 0.0;
    for (int i = 0; i < n_h; ++i) {
        double w = f[i] * (edges[i + 1] - edges[i]);
        grid.points[i] = {std::pow(g[i] * dist.xi / dist.gamma_bar, inv_alpha), g[i], w};
        raw += w;
    }
    grid.raw_weight_sum = raw;
    for (auto& p : grid.points) p.weight /= raw;
    return grid;
}

DiscreteChannel build_channel(double alpha, double lambda_n, double h, const BaConfig& cfg,
                              const SasPdfTable& table) {
    validate(cfg);
    if (!(h > 0.0)) throw std::invalid_argument("build_channel: h must be > 0");
    if (!(lambda_n > 0.0)) throw std::invalid_argument("build_channel: lambda_n must be > 0");
    const double x_max = cfg.x_max_factor * cfg.p_c;
    const double y_max = h * x_max + noise_truncation_radius(alpha, lambda_n);
    if (!(x_max > 0.0) || !(y_max > 0.0) || !std::isfinite(y_max))
        throw std::invalid_argument("build_channel: degenerate grid");
    const int mx = cfg.m_x, mn = cfg.m_n;
    DiscreteChannel ch;
    ch.inputs.resize(mx);
    ch.outputs.resize(mn);
    const double dx = 2.0 * x_max / (mx - 1);
    const double cx = 0.5 * (mx - 1);
    for (int i = 0; i < mx; ++i) ch.inputs[i] = (i - cx) * dx;
    const double dy = 2.0 * y_max / (mn - 1);
    const double cy = 0.5 * (mn - 1);
    for (int j = 0; j < mn; ++j) ch.outputs[j] = (j - cy) * dy;
    ch.transition.resize(static_cast<std::size_t>(mx) * mn);
    // Fill the lower half and mirror: guarantees P(y|x) = P(-y|-x) exactly.
    for (int i = 0; 2 * i <= mx - 1; ++i) {
        double* row = &ch.transition[static_cast<std::size_t>(i) * mn];
        double sum = 0.0;
        for (int j = 0; j < mn; ++j) {
            double v = table(ch.outputs[j] - h * ch.inputs[i]) * dy;
            row[j] = v;
            sum += v;
        }
        if (!(sum > 0.0)) throw std::runtime_error("build_channel: empty transition row");
        for (int j = 0; j < mn; ++j) row[j] /= sum;
        double* mirror = &ch.transition[static_cast<std::size_t>(mx - 1 - i) * mn];
        for (int j = 0; j < mn; ++j) mirror[j] = row[mn - 1 - j];
    }
    return ch;
}

DiscreteChannel build_channel(double alpha, double lambda_n, double h, const BaConfig& cfg) {
    validate(cfg);
    if (!(h > 0.0)) throw std::invalid_argument("build_channel: h must be > 0");
    if (!(lambda_n > 0.0)) throw std::invalid_argument("build_channel: lambda_n must be > 0");
    const double x_max = cfg.x_max_factor * cfg.p_c;
    const double tn = noise_truncation_radius(alpha, lambda_n);
    SasPdfTable table(alpha, lambda_n, (h * x_max * 2.0 + tn) * 1.05 + lambda_n);
    return build_channel(alpha, lambda_n, h, cfg, table);
}

BaResult ba_capacity(const DiscreteChannel& ch, double constraint, const BaConfig& cfg) {
    validate(cfg);
    const int mx = ch.mx(), mn = ch.mn();
    if (mx < 2 || mn < 2 ||
        ch.transition.size() != static_cast<std::size_t>(mx) * static_cast<std::size_t>(mn))
        throw std::invalid_argument("ba_capacity: malformed channel");
    if (!(constraint > 0.0))
        throw std::invalid_argument("ba_capacity: constraint must be > 0");
    const double neg_inf = -std::numeric_limits<double>::infinity();

    std::vector<double> absx(mx);
    for (int i = 0; i < mx; ++i) absx[i] = std::fabs(ch.inputs[i]);
    std::vector<double> row_plogp(mx, 0.0);
    for (int i = 0; i < mx; ++i) {
        double s = 0.0;
        for (int j = 0; j < mn; ++j) {
            double p = ch.p(i, j);
            if (p > 0.0) s += p * std::log(p);
        }
        row_plogp[i] = s;
    }

    BaResult res;
    res.r.assign(mx, 1.0 / mx);
    std::vector<double> col(mn), lncol(mn), d(mx), t(mx), w(mx);
    double c_prev = 0.0;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        std::fill(col.begin(), col.end(), 0.0);
        for (int i = 0; i < mx; ++i) {
            double ri = res.r[i];
            if (ri == 0.0) continue;
            const double* row = &ch.transition[static_cast<std::size_t>(i) * mn];
            for (int j = 0; j < mn; ++j) col[j] += ri * row[j];
        }
        for (int j = 0; j < mn; ++j) lncol[j] = col[j] > 0.0 ? std::log(col[j]) : 0.0;
        // d[i] = sum_y P(y|i) ln Q(i|y) for the reverse channel Q = r P / col.
        double dmax = neg_inf;
        for (int i = 0; i < mx; ++i) {
            if (res.r[i] == 0.0) {
                d[i] = neg_inf;
                continue;
            }
            const double* row = &ch.transition[static_cast<std::size_t>(i) * mn];
            double s = 0.0;
            for (int j = 0; j < mn; ++j) s += row[j] * lncol[j];
            d[i] = std::log(res.r[i]) + row_plogp[i] - s;
            dmax = std::max(dmax, d[i]);
        }
        double tsum = 0.0;
        for (int i = 0; i < mx; ++i) {
            t[i] = d[i] == neg_inf ? 0.0 : std::exp(d[i] - dmax);
            tsum += t[i];
        }
        for (int i = 0; i < mx; ++i) t[i] /= tsum;
        // Multiplier nu <= 0 enforcing E|X| <= constraint on the exponentiated
        // update r' ∝ exp(nu |x|) t.  g is increasing as nu decreases, with
        // g(-inf) -> 1 when the grid contains 0.
        auto g = [&](double nu) {
            double s = 0.0, sx = 0.0;
            for (int i = 0; i < mx; ++i) {
                double wi = std::exp(nu * absx[i]) * t[i];
                s += wi;
                sx += absx[i] * wi;
            }
            return s > 0.0 ? 1.0 - sx / s / constraint : 1.0;
        };
        double nu = 0.0;
        if (g(0.0) < 0.0) {
            double lo = -50.0, hi = 0.0;
            if (g(lo) < 0.0)
                throw std::runtime_error(
                    "ba_capacity: amplitude constraint infeasible on this input grid");
            for (int b = 0; b < 200; ++b) {
                double mid = 0.5 * (lo + hi);
                double gm = g(mid);
                if (std::fabs(gm) <= 1e-10) {
                    lo = hi = mid;
                    break;
                }
                if (gm > 0.0)
                    lo = mid;
                else
                    hi = mid;
                if (hi - lo < 1e-14 * 50.0) break;
            }
            nu = 0.5 * (lo + hi);
        }
        res.nu = nu;
        double lwmax = neg_inf;
        for (int i = 0; i < mx; ++i) {
            w[i] = d[i] == neg_inf ? neg_inf : nu * absx[i] + (d[i] - dmax);
            lwmax = std::max(lwmax, w[i]);
        }
        double wsum = 0.0;
        for (int i = 0; i < mx; ++i) {
            w[i] = w[i] == neg_inf ? 0.0 : std::exp(w[i] - lwmax);
            wsum += w[i];
        }
        // Blahut capacity functional J(r', Q) evaluated at the updated law:
        // monotone in the iteration and equal to I(X;Y) at the fixed point.
        double c = 0.0;
        for (int i = 0; i < mx; ++i) {
            double ri = w[i] / wsum;
            res.r[i] = ri;
            if (ri > 0.0) c += ri * (d[i] - std::log(ri));
        }
        c /= kLn2;
        res.iterations = it;
        res.last_increment = c - c_prev;
        if (c < c_prev - 1e-12) res.monotone = false;
        res.capacity = c;
        if (res.last_increment <= cfg.epsilon) {
            res.converged = true;
            break;
        }
        c_prev = c;
    }
    return res;
}

ErgodicBaResult ergodic_ba(double alpha, double lambda_n, const SnrDistribution& dist,
                           const BaConfig& cfg) {
    validate(cfg);
    if (std::fabs(dist.alpha - alpha) > 1e-12)
        throw std::invalid_argument("ergodic_ba: alpha disagrees with dist.alpha");
    if (!(lambda_n > 0.0)) throw std::invalid_argument("ergodic_ba: lambda_n must be > 0");

    ErgodicBaResult out;
    out.grid = make_fading_grid(dist, cfg.n_h);
    const double x_max = cfg.x_max_factor * cfg.p_c;
    double h_max = 0.0;
    for (const auto& p : out.grid.points) h_max = std::max(h_max, p.h);
    const double tn = noise_truncation_radius(alpha, lambda_n);
    // One shared density table covering the largest |y - h x| any grid point
    // can request, with a 5% + lambda_n pad so interpolation never hits the edge.
    SasPdfTable table(alpha, lambda_n, (h_max * x_max * 2.0 + tn) * 1.05 + lambda_n);

    out.per_point_capacity.reserve(out.grid.points.size());
    for (std::size_t i = 0; i < out.grid.points.size(); ++i) {
        const auto& pt = out.grid.points[i];
        BaResult r;
        try {
            DiscreteChannel ch = build_channel(alpha, lambda_n, pt.h, cfg, table);
            // The channel already applies h inside P(y|x), so the amplitude
            // constraint stays on the physical input X itself.
            r = ba_capacity(ch, cfg.p_c, cfg);
        } catch (const std::exception& e) {
            throw std::runtime_error("ergodic_ba: grid point " + std::to_string(i) + ": " +
                                     e.what());
        }
        if (!r.converged)
            throw std::runtime_error("ergodic_ba: grid point " + std::to_string(i) +
                                     " did not converge after " + std::to_string(r.iterations) +
                                     " iterations; last increment " +
                                     std::to_string(r.last_increment));
        out.per_point_capacity.push_back(r.capacity);
        out.capacity += pt.weight * r.capacity;
    }
    return out;
}

}  // namespace cislunar
