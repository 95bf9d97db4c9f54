#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cislunar/link_budget.hpp"

using namespace cislunar;

namespace {
constexpr double kSBandHz = 2.245e9;
constexpr double kKaBandHz = 2.725e10;
}  // namespace

TEST_CASE("decibel conversions") {
    CHECK(to_db(100.0) == doctest::Approx(20.0).epsilon(1e-14));
    CHECK(from_db(30.0) == doctest::Approx(1000.0).epsilon(1e-14));
    for (double x : {1e-12, 0.25, 1.0, 7.7e9})
        CHECK(from_db(to_db(x)) == doctest::Approx(x).epsilon(1e-13));
    CHECK_THROWS_AS(to_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(to_db(-1.0), std::invalid_argument);
}

TEST_CASE("dish gains at the reference apertures") {
    AntennaSpec tx = reference_tx_antenna();
    AntennaSpec rx = reference_rx_antenna();
    // References from the closed form eta_A (D pi f / c)^2.
    CHECK(to_db(antenna_gain(tx, kSBandHz)) == doctest::Approx(11.86205068).epsilon(1e-8));
    CHECK(to_db(antenna_gain(rx, kSBandHz)) == doctest::Approx(28.27645457).epsilon(1e-8));
    CHECK(to_db(antenna_gain(tx, kKaBandHz)) == doctest::Approx(33.5450539).epsilon(1e-8));
    CHECK(to_db(antenna_gain(rx, kKaBandHz)) == doctest::Approx(49.9594578).epsilon(1e-8));
    // Gain scales with f^2.
    CHECK(antenna_gain(tx, 2.0 * kSBandHz) ==
          doctest::Approx(4.0 * antenna_gain(tx, kSBandHz)).epsilon(1e-13));
}

TEST_CASE("Friis power transfer") {
    AntennaSpec tx = reference_tx_antenna();
    AntennaSpec rx = reference_rx_antenna();
    double g_t = antenna_gain(tx, kKaBandHz);
    double g_r = antenna_gain(rx, kKaBandHz);
    double p_r = friis_received_power(1.0, from_db(28.27), from_db(49.95), kKaBandHz,
                                      1e7, from_db(1.0), from_db(3.0));
    // Tabulated-gain reference case.
    CHECK(p_r == doctest::Approx(2.0253986480608313e-13).epsilon(1e-12));
    CHECK(to_db(p_r) == doctest::Approx(-126.93489484244994).epsilon(1e-12));
    // Inverse-square law in distance, f^-2 in frequency for fixed gains.
    double p2 = friis_received_power(1.0, g_t, g_r, kKaBandHz, 2e7, 1.0, 1.0);
    double p1 = friis_received_power(1.0, g_t, g_r, kKaBandHz, 1e7, 1.0, 1.0);
    CHECK(p1 / p2 == doctest::Approx(4.0).epsilon(1e-12));
    // Band shift at computed gains: (f2/f1)^2 from each dish, f^-2 from the
    // path, net +20 log10(f2/f1) dB.
    double ps = friis_received_power(1.0, antenna_gain(tx, kSBandHz),
                                     antenna_gain(rx, kSBandHz), kSBandHz, 1e7, 1.0, 1.0);
    double pk = friis_received_power(1.0, g_t, g_r, kKaBandHz, 1e7, 1.0, 1.0);
    CHECK(to_db(pk / ps) ==
          doctest::Approx(20.0 * std::log10(kKaBandHz / kSBandHz)).epsilon(1e-10));
    CHECK(to_db(pk / ps) == doctest::Approx(21.683).epsilon(1e-4));
    // S-band tabulated-gain reference.
    double p_s = friis_received_power(1.0, from_db(11.85), from_db(33.53), kSBandHz,
                                      1e7, from_db(1.0), from_db(3.0));
    CHECK(p_s == doctest::Approx(1.5517109980971805e-14).epsilon(1e-12));
}

TEST_CASE("solid angles") {
    CHECK(moon_solid_angle(Geometry(1e7)) ==
          doctest::Approx(0.095513125598841175).epsilon(1e-12));
    CHECK(moon_solid_angle(Geometry(7e7)) ==
          doctest::Approx(0.00193472970232).epsilon(1e-9));
    AntennaSpec rx = reference_rx_antenna();
    CHECK(antenna_solid_angle(rx, kSBandHz) ==
          doctest::Approx(0.0118303845969).epsilon(1e-9));
    CHECK(antenna_solid_angle(rx, kKaBandHz) ==
          doctest::Approx(8.0296855992663936e-5).epsilon(1e-12));
    // Geometry validation: antenna inside the Moon is rejected.
    CHECK_THROWS_AS(Geometry(1e5), std::invalid_argument);
    // Default Moon distance equals the link distance.
    Geometry g(5e7);
    CHECK(g.moon_distance == 5e7);
}

TEST_CASE("external antenna temperature clamps at beam filling") {
    // Beam smaller than the Moon: full T_B/2.
    CHECK(external_antenna_temp(300.0, 0.1, 0.05) == doctest::Approx(150.0).epsilon(1e-14));
    // Beam twice the Moon: half the rise.
    CHECK(external_antenna_temp(300.0, 0.05, 0.1) == doctest::Approx(75.0).epsilon(1e-14));
    CHECK(external_antenna_temp(0.0, 0.1, 0.05) == 0.0);
    CHECK_THROWS_AS(external_antenna_temp(-1.0, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("operational temperature chain") {
    AntennaSpec rx = reference_rx_antenna();
    RfChain chain = reference_chain();
    CHECK(operational_temp(rx, chain, 0.0) ==
          doctest::Approx(74.8674774056353).epsilon(1e-12));
    // A 300 K brightness source filling half the beam adds 75 K at the feed.
    CHECK(operational_temp(rx, chain, 75.0) ==
          doctest::Approx(74.8674774056353 + 75.0).epsilon(1e-12));
    // Decomposition into the chain's closed form.
    double want = 2.725 + 300.0 * (1.0 / 0.95 - 1.0) +
                  300.0 * (1.0 / 0.99 - 1.0) / 0.95 + 50.0 / (0.95 * 0.99);
    CHECK(operational_temp(rx, chain, 0.0) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("noise amplitude budget") {
    NoiseBudget nb = noise_budget(74.8674774056353, 1e7, 1.8);
    CHECK(nb.n0 == doctest::Approx(1.0336570781261298e-21).epsilon(1e-12));
    CHECK(to_db(nb.noise_power) == doctest::Approx(-139.85623517121059).epsilon(1e-12));
    CHECK(nb.sigma == doctest::Approx(7.189078793997635e-08).epsilon(1e-12));
    CHECK(nb.lambda_n == doctest::Approx(7.4713164633319204e-08).epsilon(1e-12));
    CHECK(nb.lambda_n ==
          doctest::Approx(std::pow(2.0, 1.0 / 1.8 - 0.5) * nb.sigma).epsilon(1e-14));
    // Gaussian case: the stable scale is sigma itself.
    NoiseBudget g = noise_budget(100.0, 1e6, 2.0);
    CHECK(g.lambda_n == doctest::Approx(g.sigma).epsilon(1e-14));
    // Monotone in temperature.
    CHECK(noise_budget(150.0, 1e7, 1.8).sigma > nb.sigma);
    CHECK_THROWS_AS(noise_budget(-1.0, 1e7, 1.8), std::invalid_argument);
    CHECK_THROWS_AS(noise_budget(100.0, 0.0, 1.8), std::invalid_argument);
}

TEST_CASE("amplitude constraint") {
    CHECK(amplitude_constraint(4.0) == 2.0);
    CHECK(amplitude_constraint(0.0) == 0.0);
    CHECK(amplitude_constraint(2.0253986480608313e-13) ==
          doctest::Approx(4.5004429204921947e-07).epsilon(1e-13));
    CHECK_THROWS_AS(amplitude_constraint(-1e-12), std::invalid_argument);
}

TEST_CASE("component validation") {
    CHECK_THROWS_AS(AntennaSpec(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(AntennaSpec(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(AntennaSpec(1.0, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(antenna_gain(reference_tx_antenna(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(friis_received_power(-1.0, 1.0, 1.0, 1e9, 1e7, 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(friis_received_power(1.0, 1.0, 1.0, 1e9, 1e7, 0.5, 1.0),
                    std::invalid_argument);
}
