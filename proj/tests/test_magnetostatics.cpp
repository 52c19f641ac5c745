#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "stripefield/constants.hpp"
#include "stripefield/geometry.hpp"
#include "stripefield/homogeneity.hpp"
#include "stripefield/material.hpp"
#include "stripefield/stray_field.hpp"

using namespace stripefield;

namespace {

const StripeGeometry& stripe() {
    static const StripeGeometry g{100e-9, 800e-9, 100e-6};
    return g;
}

const MaterialParams& py() {
    static const MaterialParams m = material_preset("permalloy");
    return m;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("closed form reproduces pinned field values") {
    CHECK(tesla_to_gauss(stray_bz(stripe(), py(), 230e-9, 0.0)) ==
          doctest::Approx(-675.757256).epsilon(1e-6));
    CHECK(tesla_to_gauss(stray_bz(stripe(), py(), 500e-9, 0.0)) ==
          doctest::Approx(-351.942640).epsilon(1e-6));
    CHECK(tesla_to_gauss(stray_bz(stripe(), py(), 0.0, 600e-9)) ==
          doctest::Approx(701.468734).epsilon(1e-6));
    CHECK(tesla_to_gauss(stray_bx(stripe(), py(), 230e-9, 200e-9)) ==
          doctest::Approx(342.616052).epsilon(1e-6));
    // Gradient in G/nm at the working point.
    CHECK(stray_bz_gradient_x(stripe(), py(), 230e-9, 0.0) * 1e-5 ==
          doctest::Approx(1.442896).epsilon(1e-6));
}

TEST_CASE("field respects the mirror symmetries of the cross-section") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(60e-9, 900e-9);
    std::uniform_real_distribution<double> uz(-950e-9, 950e-9);
    for (int i = 0; i < 25; ++i) {
        const double x = ux(rng);
        const double z = uz(rng);
        // b_z is even in both coordinates; b_x is odd in both.
        CHECK(stray_bz(stripe(), py(), -x, z) == stray_bz(stripe(), py(), x, z));
        CHECK(stray_bz(stripe(), py(), x, -z) == stray_bz(stripe(), py(), x, z));
        CHECK(stray_bx(stripe(), py(), x, -z) ==
              -stray_bx(stripe(), py(), x, z));
        CHECK(stray_bx(stripe(), py(), -x, z) ==
              doctest::Approx(-stray_bx(stripe(), py(), x, z)).epsilon(1e-12));
        // On the midline the transverse component vanishes identically.
        CHECK(stray_bx(stripe(), py(), x, 0.0) == 0.0);
    }
}

TEST_CASE("field is linear in the saturation induction") {
    MaterialParams doubled = py();
    doubled.b_sat *= 2.0;
    for (const double x : {120e-9, 230e-9, 480e-9}) {
        CHECK(stray_bz(stripe(), doubled, x, 0.0) ==
              doctest::Approx(2.0 * stray_bz(stripe(), py(), x, 0.0))
                  .epsilon(1e-14));
        CHECK(stray_bx(stripe(), doubled, x, 150e-9) ==
              doctest::Approx(2.0 * stray_bx(stripe(), py(), x, 150e-9))
                  .epsilon(1e-14));
    }
}

TEST_CASE("midline field decays monotonically away from the stripe") {
    double prev = -stray_bz(stripe(), py(), 60e-9, 0.0);
    REQUIRE(prev > 0.0);  // field opposes the magnetization beside the stripe
    for (double x = 70e-9; x <= 2000e-9; x += 10e-9) {
        const double mag = -stray_bz(stripe(), py(), x, 0.0);
        CHECK(mag > 0.0);
        CHECK(mag < prev);
        prev = mag;
    }
    // Far from the stripe the line-dipole 1/x^2 law takes over, with the
    // finite height w_z entering as (w_z/2)^2 in the denominator.
    const double b2 = stray_bz(stripe(), py(), 2e-6, 0.0);
    const double b4 = stray_bz(stripe(), py(), 4e-6, 0.0);
    const double d2 = 400e-9 * 400e-9;
    const double expected = (d2 + 4e-12) / (d2 + 16e-12);
    CHECK(b4 / b2 == doctest::Approx(expected).epsilon(5e-3));
}

TEST_CASE("analytic gradient matches a central difference") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(70e-9, 600e-9);
    std::uniform_real_distribution<double> uz(-300e-9, 300e-9);
    for (int i = 0; i < 20; ++i) {
        const double x = ux(rng);
        const double z = uz(rng);
        const double h = 1e-12;
        const double fd = (stray_bz(stripe(), py(), x + h, z) -
                           stray_bz(stripe(), py(), x - h, z)) /
                          (2.0 * h);
        CHECK(stray_bz_gradient_x(stripe(), py(), x, z) ==
              doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("evaluation on a charged face is refused") {
    CHECK_THROWS_AS(stray_bz(stripe(), py(), 0.0, 400e-9),
                    std::domain_error);
    CHECK_THROWS_AS(stray_bz(stripe(), py(), 30e-9, -400e-9),
                    std::domain_error);
    CHECK_THROWS_AS(stray_bx(stripe(), py(), -50e-9, 400e-9),
                    std::domain_error);
    CHECK_THROWS_AS(stray_bz_gradient_x(stripe(), py(), 50e-9, 400e-9),
                    std::domain_error);
    // Just off the face (in x or in z) the field is finite again.
    CHECK(std::isfinite(stray_bz(stripe(), py(), 51e-9, 400e-9)));
    CHECK(std::isfinite(stray_bz(stripe(), py(), 0.0, 401e-9)));
    CHECK(std::isfinite(stray_bz(stripe(), py(), 0.0, 399e-9)));
}

TEST_CASE("3d surface-charge quadrature agrees with the 2d closed form") {
    // Fixed spot checks at the mid-length plane.
    CHECK(rel(oracle_bz_3d(stripe(), py(), 230e-9, 0.0, 0.0, 64),
              stray_bz(stripe(), py(), 230e-9, 0.0)) < 5e-4);
    CHECK(rel(oracle_bz_3d(stripe(), py(), 500e-9, 0.0, 0.0, 64),
              stray_bz(stripe(), py(), 500e-9, 0.0)) < 5e-4);
    CHECK(rel(oracle_bx_3d(stripe(), py(), 230e-9, 0.0, 200e-9, 64),
              stray_bx(stripe(), py(), 230e-9, 200e-9)) < 1e-6);

    // Randomized agreement across the map window, avoiding the faces.
    std::mt19937 rng(20260817);
    std::uniform_real_distribution<double> ux(-500e-9, 500e-9);
    std::uniform_real_distribution<double> uz(-350e-9, 350e-9);
    int tested = 0;
    while (tested < 20) {
        const double x = ux(rng);
        if (std::abs(std::abs(x) - 50e-9) < 5e-9) continue;
        const double z = uz(rng);
        ++tested;
        CHECK(rel(oracle_bz_3d(stripe(), py(), x, 0.0, z, 64),
                  stray_bz(stripe(), py(), x, z)) < 1e-3);
    }
}

TEST_CASE("quadrature off the mid-length plane stays close to 2d") {
    // A quarter of the way down the stripe the cross-section still sees an
    // effectively infinite wire.
    const double y = stripe().l_y / 4.0;
    CHECK(rel(oracle_bz_3d(stripe(), py(), 230e-9, y, 0.0, 64),
              stray_bz(stripe(), py(), 230e-9, 0.0)) < 1e-2);
}

TEST_CASE("2d limit improves as the stripe gets longer") {
    StripeGeometry short_stripe = stripe();
    short_stripe.l_y = 10.0 * stripe().w_z;
    StripeGeometry long_stripe = stripe();
    long_stripe.l_y = 100.0 * stripe().w_z;
    const double target = stray_bz(stripe(), py(), 230e-9, 0.0);
    const double dev_short =
        std::abs(oracle_bz_3d(short_stripe, py(), 230e-9, 0.0, 0.0, 64) -
                 target);
    const double dev_long =
        std::abs(oracle_bz_3d(long_stripe, py(), 230e-9, 0.0, 0.0, 64) -
                 target);
    CHECK(dev_long < dev_short);
    CHECK(dev_short < 1e-3);
}

TEST_CASE("homogeneity functional changes sign exactly once") {
    CHECK(homogeneity_c(stripe(), py(), 150e-9).c_value ==
          doctest::Approx(-1.456514e-10).epsilon(1e-3));
    CHECK(homogeneity_c(stripe(), py(), 1000e-9).c_value ==
          doctest::Approx(1.743617e-11).epsilon(1e-3));

    int flips = 0;
    double prev = homogeneity_c(stripe(), py(), 60e-9).c_value;
    for (double x = 70e-9; x <= 1000e-9; x += 10e-9) {
        const double c = homogeneity_c(stripe(), py(), x).c_value;
        if ((c > 0.0) != (prev > 0.0)) ++flips;
        prev = c;
    }
    CHECK(flips == 1);

    CHECK_THROWS_AS(homogeneity_c(stripe(), py(), 30e-9), std::domain_error);
}

TEST_CASE("homogeneity optimum sits at the pinned working point") {
    const double x_opt = find_x_optim(stripe(), py());
    CHECK(x_opt * 1e9 == doctest::Approx(230.2343).epsilon(1e-4));

    // The zero of a functional linear in b_sat cannot move with b_sat.
    MaterialParams scaled = py();
    scaled.b_sat *= 2.0;
    CHECK(find_x_optim(stripe(), scaled) ==
          doctest::Approx(x_opt).epsilon(1e-12));
    CHECK(find_x_optim(stripe(), material_preset("dysprosium")) ==
          doctest::Approx(x_opt).epsilon(1e-12));

    // The echo of the probe position in the result struct is exact.
    CHECK(homogeneity_c(stripe(), py(), 230e-9).x == 230e-9);
}
