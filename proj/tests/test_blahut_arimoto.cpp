#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cislunar/alpha_stable.hpp"
#include "cislunar/blahut_arimoto.hpp"
#include "cislunar/capacity_bounds.hpp"
#include "cislunar/fading.hpp"
#include "cislunar/snr_model.hpp"

using namespace cislunar;

namespace {
double h2(double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); }

BaConfig small_cfg(double p_c) {
    BaConfig cfg;
    cfg.p_c = p_c;
    cfg.m_x = 33;
    cfg.m_n = 257;
    return cfg;
}
}  // namespace

TEST_CASE("binary symmetric channel anchor") {
    DiscreteChannel ch;
    ch.inputs = {-1.0, 1.0};
    ch.outputs = {-1.0, 1.0};
    ch.transition = {0.9, 0.1, 0.1, 0.9};
    BaConfig cfg;
    cfg.p_c = 1.0;
    cfg.epsilon = 1e-10;
    // E|X| = 1 for every input law, so the constraint never binds and the
    // answer is the unconstrained BSC capacity 1 - H2(0.1).
    BaResult r = ba_capacity(ch, 1.0, cfg);
    CHECK(r.converged);
    CHECK(r.capacity == doctest::Approx(1.0 - h2(0.1)).epsilon(1e-6));
    CHECK(r.capacity == doctest::Approx(0.53100440641071878).epsilon(1e-6));
    CHECK(r.r[0] == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("noiseless channel with a binding amplitude constraint") {
    DiscreteChannel ch;
    ch.inputs = {0.0, 1.0};
    ch.outputs = {0.0, 1.0};
    ch.transition = {1.0, 0.0, 0.0, 1.0};
    BaConfig cfg;
    cfg.p_c = 0.1;
    cfg.epsilon = 1e-10;
    // Identity channel: I(X;Y) = H(X); the constraint E|X| <= 0.1 forces
    // P(X=1) = 0.1, so capacity = H2(0.1).
    BaResult r = ba_capacity(ch, 0.1, cfg);
    CHECK(r.converged);
    CHECK(r.capacity == doctest::Approx(h2(0.1)).epsilon(1e-6));
    CHECK(r.capacity == doctest::Approx(0.46899559358928121).epsilon(1e-6));
    CHECK(r.r[1] == doctest::Approx(0.1).epsilon(1e-4));
    CHECK(r.nu < 0.0);
}

TEST_CASE("infeasible constraint is reported") {
    DiscreteChannel ch;
    ch.inputs = {-2.0, -1.0, 1.0, 2.0};
    ch.outputs = {-2.0, -1.0, 1.0, 2.0};
    ch.transition = {1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0,
                     0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
    BaConfig cfg;
    cfg.p_c = 0.5;
    // min E|X| over the alphabet is 1 > 0.5: no feasible input law exists.
    CHECK_THROWS_AS(ba_capacity(ch, 0.5, cfg), std::runtime_error);
}

TEST_CASE("discretized stable channel structure") {
    BaConfig cfg = small_cfg(1.0);
    DiscreteChannel ch = build_channel(1.8, 1.0 / std::sqrt(2.0), 1.0, cfg);
    const int mx = ch.mx(), mn = ch.mn();
    CHECK(mx == 33);
    CHECK(mn == 257);
    // Input grid symmetric about zero with extent x_max_factor * p_c.
    CHECK(ch.inputs.front() == -4.0);
    CHECK(ch.inputs.back() == 4.0);
    CHECK(ch.inputs[mx / 2] == 0.0);
    // Output grid covers h * x_max plus the noise truncation radius.
    double tn = noise_truncation_radius(1.8, 1.0 / std::sqrt(2.0));
    CHECK(ch.outputs.back() >= 4.0 + 0.99 * tn);
    for (int j = 0; j < mn; ++j)
        CHECK(ch.outputs[j] == -ch.outputs[mn - 1 - j]);
    // Rows are probability vectors.
    for (int i = 0; i < mx; ++i) {
        double sum = 0.0;
        for (int j = 0; j < mn; ++j) {
            CHECK(ch.p(i, j) >= 0.0);
            sum += ch.p(i, j);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Negating the input mirrors the output law exactly (bitwise).
    for (int i = 0; i < mx; ++i)
        for (int j = 0; j < mn; ++j)
            CHECK(ch.p(i, j) == ch.p(mx - 1 - i, mn - 1 - j));
}

TEST_CASE("table-driven channel matches the direct construction") {
    BaConfig cfg = small_cfg(1.0);
    const double lam = 1.0 / std::sqrt(2.0);
    DiscreteChannel direct = build_channel(1.8, lam, 1.0, cfg);
    double tn = noise_truncation_radius(1.8, lam);
    SasPdfTable table(1.8, lam, 2.0 * (4.0 + tn));
    DiscreteChannel tabled = build_channel(1.8, lam, 1.0, cfg, table);
    REQUIRE(tabled.mx() == direct.mx());
    REQUIRE(tabled.mn() == direct.mn());
    for (int i = 0; i < direct.mx(); ++i)
        for (int j = 0; j < direct.mn(); ++j)
            CHECK(tabled.p(i, j) == doctest::Approx(direct.p(i, j)).epsilon(5e-5));
}

TEST_CASE("fading grid") {
    SnrDistribution d(1.8, NakagamiParams(1.0), 21.187843405471089);
    SUBCASE("single point degenerates to the median") {
        FadingGrid g = make_fading_grid(d, 1);
        REQUIRE(g.points.size() == 1);
        CHECK(g.points[0].weight == 1.0);
        CHECK(g.points[0].gamma == doctest::Approx(d.quantile(0.5)).epsilon(1e-12));
        CHECK(g.raw_weight_sum == 1.0);
    }
    SUBCASE("prescribed grid covers nearly all mass and renormalizes") {
        FadingGrid g = make_fading_grid(d, 40);
        REQUIRE(g.points.size() == 40);
        CHECK(g.raw_weight_sum > 0.95);
        CHECK(g.raw_weight_sum <= 1.0);
        double sum = 0.0, prev = 0.0;
        for (const auto& p : g.points) {
            CHECK(p.weight > 0.0);
            CHECK(p.gamma > prev);
            CHECK(p.h > 0.0);
            prev = p.gamma;
            sum += p.weight;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("coverage holds across fading severities") {
        for (double m : {1.0, 5.0, 15.0}) {
            SnrDistribution dm(2.0, NakagamiParams(m), 50.0);
            FadingGrid g = make_fading_grid(dm, 40);
            CHECK(g.raw_weight_sum > 0.95);
            CHECK(g.raw_weight_sum <= 1.0);
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(make_fading_grid(d, 0), std::invalid_argument);
        SnrDistribution z(1.8, NakagamiParams(1.0), 0.0);
        CHECK_THROWS_AS(make_fading_grid(z, 10), std::invalid_argument);
    }
}

TEST_CASE("fixed-fading capacity is feasible, convergent, and above the bound") {
    const double lam = 1.0 / std::sqrt(2.0);
    BaConfig cfg = small_cfg(5.0);
    DiscreteChannel ch = build_channel(1.8, lam, 1.0, cfg);
    BaResult r = ba_capacity(ch, cfg.p_c, cfg);
    CHECK(r.converged);
    CHECK(r.monotone);
    CHECK(r.iterations <= cfg.max_iter);
    double e_abs = 0.0, mass = 0.0;
    for (std::size_t i = 0; i < r.r.size(); ++i) {
        CHECK(r.r[i] >= 0.0);
        mass += r.r[i];
        e_abs += r.r[i] * std::abs(ch.inputs[i]);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(e_abs <= cfg.p_c * (1.0 + 1e-6));
    // Achievable rate dominates the analytic lower bound for the same channel.
    double ratio = cfg.p_c / mean_abs(StableParams(1.8, 0.0, lam, 0.0));
    CHECK(r.capacity >= capacity_lb(ratio, 1.8) - 0.1);
}

TEST_CASE("ergodic average is stable under grid refinement") {
    const double alpha = 1.8, lam = 1.0 / std::sqrt(2.0);
    SnrDistribution d = SnrDistribution::from_physical(5.0, alpha, lam, NakagamiParams(1.0));
    BaConfig cfg;
    cfg.p_c = 5.0;
    cfg.n_h = 40;
    ErgodicBaResult fine = ergodic_ba(alpha, lam, d, cfg);
    cfg.n_h = 20;
    ErgodicBaResult coarse = ergodic_ba(alpha, lam, d, cfg);
    CHECK(std::abs(fine.capacity - coarse.capacity) < 0.02);
    CHECK(fine.grid.points.size() == 40);
    CHECK(fine.per_point_capacity.size() == 40);
    // Weighted average of the per-point capacities reproduces the headline.
    double acc = 0.0;
    for (std::size_t i = 0; i < fine.per_point_capacity.size(); ++i)
        acc += fine.grid.points[i].weight * fine.per_point_capacity[i];
    CHECK(acc == doctest::Approx(fine.capacity).epsilon(1e-12));
}

TEST_CASE("results are deterministic") {
    BaConfig cfg = small_cfg(2.0);
    DiscreteChannel ch = build_channel(2.0, 1.0 / std::sqrt(2.0), 1.0, cfg);
    BaResult a = ba_capacity(ch, cfg.p_c, cfg);
    BaResult b = ba_capacity(ch, cfg.p_c, cfg);
    CHECK(a.capacity == b.capacity);
    CHECK(a.iterations == b.iterations);
    CHECK(a.nu == b.nu);
    CHECK(a.r == b.r);
}

TEST_CASE("iteration starvation is reported, not hidden") {
    BaConfig cfg = small_cfg(5.0);
    cfg.max_iter = 1;
    DiscreteChannel ch = build_channel(1.8, 1.0 / std::sqrt(2.0), 1.0, cfg);
    BaResult r = ba_capacity(ch, cfg.p_c, cfg);
    CHECK_FALSE(r.converged);
    // The ergodic driver refuses to average unconverged points.
    SnrDistribution d =
        SnrDistribution::from_physical(5.0, 1.8, 1.0 / std::sqrt(2.0), NakagamiParams(1.0));
    bool threw = false;
    try {
        ergodic_ba(1.8, 1.0 / std::sqrt(2.0), d, cfg);
    } catch (const std::runtime_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("grid point") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("configuration and input validation") {
    BaConfig cfg;
    cfg.epsilon = 0.0;
    DiscreteChannel ch;
    ch.inputs = {0.0, 1.0};
    ch.outputs = {0.0, 1.0};
    ch.transition = {1.0, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(ba_capacity(ch, 0.5, cfg), std::invalid_argument);
    cfg = BaConfig{};
    cfg.m_x = 2;
    CHECK_THROWS_AS(build_channel(1.8, 1.0, 1.0, cfg), std::invalid_argument);
    cfg = BaConfig{};
    CHECK_THROWS_AS(build_channel(1.8, 1.0, 0.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(build_channel(1.8, -1.0, 1.0, cfg), std::invalid_argument);
    DiscreteChannel bad = ch;
    bad.transition.pop_back();
    CHECK_THROWS_AS(ba_capacity(bad, 0.5, cfg), std::invalid_argument);
    CHECK_THROWS_AS(ba_capacity(ch, 0.0, cfg), std::invalid_argument);
    // Ergodic driver rejects a distribution whose alpha disagrees.
    SnrDistribution d(2.0, NakagamiParams(1.0), 10.0);
    CHECK_THROWS_AS(ergodic_ba(1.8, 1.0, d, cfg), std::invalid_argument);
}
