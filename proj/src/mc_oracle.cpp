#include "cislunar/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "cislunar/capacity_bounds.hpp"

namespace cislunar {

namespace {

void check_cfg(const McConfig& cfg) {
    if (cfg.n_samples < 10000)
        throw std::invalid_argument("McConfig: n_samples must be >= 1e4");
    if (!(cfg.confidence_z > 0.0))
        throw std::invalid_argument("McConfig: confidence_z must be > 0");
}

// Well-spaced deterministic sub-seed for the k-th check of a validation run.
McConfig derived(const McConfig& base, std::uint64_t k) {
    McConfig c = base;
    c.seed = base.seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    return c;
}

McEstimate mean_and_se(const std::vector<double>& xs) {
    double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    double mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n), static_cast<long>(xs.size())};
}

// Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2| (sorts in place).
double ks_stat(std::vector<double>& a, std::vector<double>& b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    return d;
}

std::string fmt(const char* f, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void add(ValidationReport& rep, std::string name, double expected, double actual, double tol,
         bool pass) {
    rep.checks.push_back({std::move(name), expected, actual, tol, pass});
}

void add_band(ValidationReport& rep, std::string name, double expected, const McEstimate& e,
              double z) {
    double tol = z * e.se;
    add(rep, std::move(name), expected, e.value, tol, std::fabs(e.value - expected) <= tol);
}

}  // namespace

McEstimate mc_ergodic(const SnrDistribution& dist, const McConfig& cfg) {
    check_cfg(cfg);
    McEstimate est;
    est.n = cfg.n_samples;
    if (dist.gamma_bar == 0.0) return est;
    Rng rng(cfg.seed);
    const double scale = dist.gamma_bar / dist.xi;
    const double n = static_cast<double>(cfg.n_samples);
    double sum = 0.0, sumsq = 0.0;
    for (long i = 0; i < cfg.n_samples; ++i) {
        double h = sample_h(dist.fading, rng);
        double v = std::log2(1.0 + scale * std::pow(h, dist.alpha)) / dist.alpha;
        sum += v;
        sumsq += v * v;
    }
    est.value = sum / n;
    est.se = std::sqrt(std::max(0.0, sumsq - sum * sum / n) / (n - 1.0) / n);
    return est;
}

McEstimate mc_outage(const SnrDistribution& dist, double gamma_th, const McConfig& cfg) {
    check_cfg(cfg);
    if (!(gamma_th >= 0.0))
        throw std::invalid_argument("mc_outage: gamma_th must be >= 0");
    Rng rng(cfg.seed);
    const double scale = dist.gamma_bar > 0.0 ? dist.gamma_bar / dist.xi : 0.0;
    long hits = 0;
    for (long i = 0; i < cfg.n_samples; ++i) {
        double h = sample_h(dist.fading, rng);
        if (scale * std::pow(h, dist.alpha) < gamma_th) ++hits;
    }
    const double n = static_cast<double>(cfg.n_samples);
    double p = hits / n;
    return {p, std::sqrt(p * (1.0 - p) / n), cfg.n_samples};
}

namespace {

// Mean of |x| with a heavy-tail-safe branch: for alpha < 1.5 the variance of
// |x| is infinite, so a plain mean's SE is meaningless.  Median of 20 batch
// means is stable; its SE comes from the batch spread via the asymptotic
// median-vs-mean factor.
McEstimate abs_moment(const std::vector<double>& xs, double alpha) {
    if (alpha < 1.5) {
        const int nb = 20;
        const long per = static_cast<long>(xs.size()) / nb;
        std::vector<double> means(nb);
        for (int b = 0; b < nb; ++b) {
            double s = 0.0;
            for (long i = 0; i < per; ++i)
                s += std::fabs(xs[static_cast<std::size_t>(b * per + i)]);
            means[b] = s / static_cast<double>(per);
        }
        double mbar = 0.0;
        for (double m : means) mbar += m;
        mbar /= nb;
        double ss = 0.0;
        for (double m : means) ss += (m - mbar) * (m - mbar);
        double sd = std::sqrt(ss / (nb - 1.0));
        std::sort(means.begin(), means.end());
        McEstimate est;
        est.value = 0.5 * (means[nb / 2 - 1] + means[nb / 2]);
        est.se = 1.2533141373155003 * sd / std::sqrt(static_cast<double>(nb));
        est.n = per * nb;
        return est;
    }
    std::vector<double> abss(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) abss[i] = std::fabs(xs[i]);
    return mean_and_se(abss);
}

}  // namespace

McEstimate mc_noise_moments(const ComplexIsotropicNoise& noise, const McConfig& cfg) {
    check_cfg(cfg);
    ComplexNoiseSampler sampler(noise);
    Rng rng(cfg.seed);
    std::vector<double> xs(static_cast<std::size_t>(cfg.n_samples));
    for (auto& x : xs) x = sampler.sample(rng).real();
    return abs_moment(xs, noise.alpha);
}

ValidationReport run_validation(const McConfig& cfg) {
    check_cfg(cfg);
    ValidationReport rep;
    std::uint64_t k = 0;
    const double z = cfg.confidence_z;

    // Noise first-absolute-moment checks against 2 lambda Gamma(1-1/alpha)/pi,
    // at both levels of the subordinated construction: each quadrature
    // Re(n) = sqrt(A_1) G_1 is S(alpha, 0, sigma/sqrt(2)) (the subordinator
    // scale cancels the secant of its Laplace transform exactly), while the
    // reported lambda_n = 2^{1/alpha-1/2} sigma is the stable-sum scale of
    // Re(n) + Im(n).
    // Below alpha = 1.5 the batch means are themselves skewed-stable, so the
    // median-of-batches estimate sits below E|Z| by a bias that shrinks at the
    // same rate as the batch spread; an SE band can never close over it.  The
    // half-band check below is the "finite, large-sample stable" criterion: it
    // still cleanly separates a mis-scaled sampler, which errs by the factor
    // 2^{1/alpha} (+78% at alpha = 1.2) this suite exists to catch.
    auto add_moment = [&](const std::string& name, double expected, const McEstimate& e,
                          double a) {
        if (a < 1.5) {
            const double tol = 0.5 * expected;
            const bool ok = std::isfinite(e.value) && std::fabs(e.value - expected) <= tol;
            add(rep, name, expected, e.value, tol, ok);
        } else {
            add_band(rep, name, expected, e, z);
        }
    };
    for (double a : {2.0, 1.8, 1.2}) {
        ComplexIsotropicNoise noise = make_complex_noise(a, 1.0);
        const StableParams law_re(a, 0.0, noise.sigma / std::sqrt(2.0));
        const StableParams law_sum(a, 0.0, noise.lambda_n);
        {
            McEstimate e = mc_noise_moments(noise, derived(cfg, k++));
            add_moment("noise_mean_abs_re_a" + fmt("%.1f", a), mean_abs(law_re), e, a);
        }
        {
            ComplexNoiseSampler sampler(noise);
            Rng rng(derived(cfg, k++).seed);
            std::vector<double> xs(static_cast<std::size_t>(cfg.n_samples));
            for (auto& x : xs) {
                const auto v = sampler.sample(rng);
                x = v.real() + v.imag();
            }
            McEstimate e = abs_moment(xs, a);
            add_moment("noise_mean_abs_sum_a" + fmt("%.1f", a), mean_abs(law_sum), e, a);
        }
    }

    // Empirical characteristic functions of Re(n) and Re(n)+Im(n) against
    // exp(-(lambda t)^alpha) at the matching scales.
    for (double a : {1.8, 2.0}) {
        ComplexIsotropicNoise noise = make_complex_noise(a, 1.0);
        ComplexNoiseSampler sampler(noise);
        Rng rng(derived(cfg, k++).seed);
        std::vector<double> re(static_cast<std::size_t>(cfg.n_samples));
        std::vector<double> sum(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            const auto v = sampler.sample(rng);
            re[i] = v.real();
            sum[i] = v.real() + v.imag();
        }
        const StableParams law_re(a, 0.0, noise.sigma / std::sqrt(2.0));
        const StableParams law_sum(a, 0.0, noise.lambda_n);
        std::vector<double> cs(re.size());
        for (double t : {0.5, 1.0, 2.0}) {
            for (std::size_t i = 0; i < re.size(); ++i) cs[i] = std::cos(t * re[i]);
            add_band(rep, "noise_ecf_re_a" + fmt("%.1f", a) + "_t" + fmt("%.1f", t),
                     char_fn(law_re, t).real(), mean_and_se(cs), z);
            for (std::size_t i = 0; i < sum.size(); ++i) cs[i] = std::cos(t * sum[i]);
            add_band(rep, "noise_ecf_sum_a" + fmt("%.1f", a) + "_t" + fmt("%.1f", t),
                     char_fn(law_sum, t).real(), mean_and_se(cs), z);
        }
    }

    // Chi-square goodness of fit of sampled SNR against the analytic law,
    // 50 equal-probability bins, 1% critical value at 49 dof.
    const double chi2_crit = 74.91947430847816;
    for (double m : {1.0, 5.0, 15.0}) {
        for (double a : {1.8, 2.0}) {
            SnrDistribution dist(a, NakagamiParams(m), 25.0);
            const int nbins = 50;
            std::vector<double> edges(nbins - 1);
            for (int b = 0; b < nbins - 1; ++b)
                edges[b] = dist.quantile((b + 1) / static_cast<double>(nbins));
            std::vector<long> counts(nbins, 0);
            Rng rng(derived(cfg, k++).seed);
            const double scale = dist.gamma_bar / dist.xi;
            for (long i = 0; i < cfg.n_samples; ++i) {
                double g = scale * std::pow(sample_h(dist.fading, rng), a);
                auto it = std::upper_bound(edges.begin(), edges.end(), g);
                ++counts[it - edges.begin()];
            }
            const double expect = cfg.n_samples / static_cast<double>(nbins);
            double chi2 = 0.0;
            for (long c : counts) chi2 += (c - expect) * (c - expect) / expect;
            add(rep, "snr_gof_chi2_m" + fmt("%g", m) + "_a" + fmt("%.1f", a), chi2_crit, chi2,
                chi2_crit, chi2 <= chi2_crit);
        }
    }

    // Sampled ergodic mean against the quadrature bound.
    {
        SnrDistribution d1(2.0, NakagamiParams(1.0), 10.0);
        McEstimate e1 = mc_ergodic(d1, derived(cfg, k++));
        add_band(rep, "ergodic_mc_m1_a2.0", ergodic_capacity_lb_quadrature(d1), e1, z);

        NakagamiParams nak(15.0);
        SnrDistribution d2(1.8, nak, gamma_bar_from(10.0, 1.8, 1.0 / std::sqrt(2.0), nak));
        McEstimate e2 = mc_ergodic(d2, derived(cfg, k++));
        add_band(rep, "ergodic_mc_m15_a1.8", ergodic_capacity_lb_quadrature(d2), e2, z);
    }

    // Empirical outage never exceeds the analytic upper bound (+z SE slack).
    for (double m : {1.0, 5.0, 15.0}) {
        for (double a : {1.8, 2.0}) {
            SnrDistribution dist(a, NakagamiParams(m), 50.0);
            Rng rng(derived(cfg, k++).seed);
            const double scale = dist.gamma_bar / dist.xi;
            std::vector<double> gs(static_cast<std::size_t>(cfg.n_samples));
            for (auto& g : gs) g = scale * std::pow(sample_h(dist.fading, rng), a);
            for (double q : {0.1, 0.5}) {
                double gth = dist.quantile(q);
                long hits = 0;
                for (double g : gs)
                    if (g < gth) ++hits;
                double p = hits / static_cast<double>(cfg.n_samples);
                double se = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.n_samples));
                double ub = outage_ub(dist, gth);
                add(rep,
                    "outage_dom_m" + fmt("%g", m) + "_a" + fmt("%.1f", a) + "_q" +
                        fmt("%.2f", q),
                    ub, p, z * se, p <= ub + z * se);
            }
        }
    }

    // Distribution-level agreement: two-sample KS at the 1% level.
    const double ks_c01 = 1.6276236307187292;
    const long nks = std::min<long>(cfg.n_samples, 200000);
    const double d_crit =
        ks_c01 * std::sqrt((nks + nks) / (static_cast<double>(nks) * nks));
    {
        // CMS sampler at alpha = 2 against the polar-method normal.
        Rng rng(derived(cfg, k++).seed);
        StableSampler s(StableParams(2.0, 0.0, 1.0 / std::sqrt(2.0)));
        std::vector<double> a(nks), b(nks);
        for (auto& x : a) x = s.sample(rng);
        for (auto& x : b) x = rng.normal();
        double d = ks_stat(a, b);
        add(rep, "ks_cms_gaussian", d_crit, d, d_crit, d <= d_crit);
    }
    {
        // Re of the subordinated complex noise against the direct CMS sampler
        // at the component scale sigma/sqrt(2).
        Rng rng(derived(cfg, k++).seed);
        ComplexIsotropicNoise noise = make_complex_noise(1.8, 1.0);
        ComplexNoiseSampler cs(noise);
        StableSampler s(StableParams(1.8, 0.0, noise.sigma / std::sqrt(2.0)));
        std::vector<double> a(nks), b(nks);
        for (auto& x : a) x = cs.sample(rng).real();
        for (auto& x : b) x = s.sample(rng);
        double d = ks_stat(a, b);
        add(rep, "ks_complex_re_a1.8", d_crit, d, d_crit, d <= d_crit);
    }
    {
        // Re + Im of the complex noise against the direct CMS sampler at the
        // reported stable-sum scale lambda_n.
        Rng rng(derived(cfg, k++).seed);
        ComplexIsotropicNoise noise = make_complex_noise(1.8, 1.0);
        ComplexNoiseSampler cs(noise);
        StableSampler s(StableParams(1.8, 0.0, noise.lambda_n));
        std::vector<double> a(nks), b(nks);
        for (auto& x : a) {
            const auto v = cs.sample(rng);
            x = v.real() + v.imag();
        }
        for (auto& x : b) x = s.sample(rng);
        double d = ks_stat(a, b);
        add(rep, "ks_complex_sum_a1.8", d_crit, d, d_crit, d <= d_crit);
    }

    return rep;
}

}  // namespace cislunar
