#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cislunar/meijer_g.hpp"

using namespace cislunar;

TEST_CASE("classical identities") {
    // G^{1,2}_{2,2}[z | 1,1; 1,0] = ln(1+z)
    MeijerGSpec log_spec;
    log_spec.a_front = {1.0, 1.0};
    log_spec.b_front = {1.0};
    log_spec.b_rear = {0.0};
    log_spec.z = 1.0;
    CHECK(meijer_g(log_spec) == doctest::Approx(0.69314718055994531).epsilon(1e-12));
    log_spec.z = 0.3;
    CHECK(meijer_g(log_spec) == doctest::Approx(0.26236426446749105).epsilon(1e-12));
    log_spec.z = 0.05;
    CHECK(meijer_g(log_spec) == doctest::Approx(0.048790164169432003).epsilon(1e-12));

    // G^{1,0}_{0,1}[z | -; b] = z^b exp(-z)
    MeijerGSpec exp_spec;
    exp_spec.b_front = {3.0};
    exp_spec.z = 2.0;
    CHECK(meijer_g(exp_spec) == doctest::Approx(1.0826822658929015).epsilon(1e-12));
    exp_spec.b_front = {0.0};
    exp_spec.z = 1.5;
    CHECK(meijer_g(exp_spec) == doctest::Approx(0.22313016014842982).epsilon(1e-12));
}

TEST_CASE("higher-order reference value") {
    // G^{3,1}_{2,3}[0.1 | 0; 1 | 1,0,0; -]
    MeijerGSpec s;
    s.a_front = {0.0};
    s.a_rear = {1.0};
    s.b_front = {1.0, 0.0, 0.0};
    s.z = 0.1;
    CHECK(meijer_g(s) == doctest::Approx(2.0146425447084517).epsilon(1e-11));
}

TEST_CASE("contour collision is rejected") {
    // Needs a strip with max(b_front) < c < min(a_front); a=2, b=0 leaves none
    // after the integrand's pole ladders overlap.
    MeijerGSpec s;
    s.a_front = {2.0};
    s.b_front = {0.0};
    s.z = 1.0;
    CHECK_THROWS_AS(meijer_g(s), std::domain_error);
}

TEST_CASE("order cap") {
    CHECK(kMeijerOrderLimit == 32);
}

TEST_CASE("rational reconstruction of the tail exponent ratio") {
    auto r = rational_alpha(2.0);
    CHECK(r.l == 1);
    CHECK(r.k == 1);
    r = rational_alpha(1.8);
    CHECK(r.l == 10);
    CHECK(r.k == 9);
    r = rational_alpha(5.0 / 3.0);
    CHECK(r.l == 6);
    CHECK(r.k == 5);
    r = rational_alpha(1.9);
    CHECK(r.l == 20);
    CHECK(r.k == 19);
    r = rational_alpha(1.5);
    CHECK(r.l == 4);
    CHECK(r.k == 3);
}
