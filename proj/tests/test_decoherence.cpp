#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "stripefield/constants.hpp"
#include "stripefield/decoherence.hpp"
#include "stripefield/eigensolve.hpp"
#include "stripefield/geometry.hpp"
#include "stripefield/lines.hpp"
#include "stripefield/material.hpp"
#include "stripefield/potential.hpp"
#include "stripefield/registry.hpp"
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

const PotentialProfile& pot4000() {
    static const PotentialProfile p = build_potential(stripe(), py(), 0.0, 4000);
    return p;
}

const std::vector<ModeSolution>& modes8() {
    static const std::vector<ModeSolution> m =
        tm_eigensolve(pot4000(), 8).modes;
    return m;
}

const std::vector<SpinWaveLine>& registry() {
    static const std::vector<SpinWaveLine> lines =
        assemble_lines(modes8(), stripe(), py(), 34e9, 4);
    return lines;
}

RegisterDesign default_design() {
    RegisterDesign d;
    d.geom = stripe();
    d.mat = py();
    d.qubit = QubitSpec{};
    d.nu = 34e9;
    for (int i = 0; i < 16; ++i) d.positions.push_back(199e-9 + i * 5e-9);
    d.l_inter = 5e-9;
    return d;
}

const Anchor& anchor() {
    static const Anchor a{230e-9, 2.0, 3.4};
    return a;
}

const DecoherenceModel& model() {
    static const DecoherenceModel m =
        calibrate(default_design(), pot4000(), modes8(), registry(), anchor());
    return m;
}

double coth(double x) { return 1.0 / std::tanh(x); }

/// Operating field of a qubit at x, as the rate model sees it.
double qubit_field(double x) {
    return field_from_frequency(34e9, 2.0) - stray_bz(stripe(), py(), x, 0.0);
}

}  // namespace

TEST_CASE("calibration reproduces the anchor exactly") {
    const DecoherenceModel& m = model();
    CHECK(m.de_fmr == py().de_fmr);
    CHECK(m.x_ref == anchor().x);
    CHECK(m.alpha_phi == 1.0 / 32);
    CHECK(m.g_ref == doctest::Approx(-14.93777).epsilon(1e-5));
    CHECK(m.gamma0 == doctest::Approx(1.044031e-01).epsilon(1e-3));

    const RegisterDesign design = default_design();
    const DecoherenceResult at = decoherence_at(
        m, design, pot4000(), modes8(), registry(), anchor().x, anchor().temp);
    CHECK(at.t1 == doctest::Approx(3.4).epsilon(1e-9));
    CHECK(at.t2 == doctest::Approx(6.4).epsilon(1e-9));

    // Doubling the anchor lifetime halves the bare rate; nothing else moves.
    const DecoherenceModel slow = calibrate(
        design, pot4000(), modes8(), registry(), Anchor{230e-9, 2.0, 6.8});
    CHECK(slow.gamma0 == doctest::Approx(m.gamma0 / 2.0).epsilon(1e-12));
    CHECK(slow.g_ref == m.g_ref);
    CHECK(slow.de_fmr == m.de_fmr);
}

TEST_CASE("temperature dependence is a pure thermal-occupation factor") {
    const RegisterDesign design = default_design();
    const double arg = consts::h * 34e9 / (2.0 * consts::k_b);
    const double rate2 = t1_rate(model(), design, pot4000(), modes8(),
                                 registry(), 230e-9, 2.0);
    for (const double temp : {3.0, 10.0, 77.0, 300.0}) {
        const double rate = t1_rate(model(), design, pot4000(), modes8(),
                                    registry(), 230e-9, temp);
        CHECK(rate / rate2 ==
              doctest::Approx(coth(arg / temp) / coth(arg / 2.0))
                  .epsilon(1e-9));
    }
    CHECK(coth(arg / 300.0) / coth(arg / 2.0) ==
          doctest::Approx(142.1987).epsilon(1e-5));

    // Room-temperature lifetimes follow from the anchor and the coth ratio
    // alone; the spectral sum cancels.
    const DecoherenceResult rt =
        decoherence_at(model(), design, pot4000(), modes8(), registry(),
                       230e-9, 300.0);
    CHECK(rt.t1 == doctest::Approx(23.910208e-3).epsilon(1e-5));
    CHECK(rt.t2 == doctest::Approx(45.007450e-3).epsilon(1e-5));

    const std::vector<double> temps = {2.0, 3.0, 5.0, 10.0, 20.0,
                                       30.0, 50.0, 100.0, 200.0, 300.0};
    const std::vector<SweepRow> rows = sweep_temp(
        model(), design, pot4000(), modes8(), registry(), 230e-9, temps);
    REQUIRE(rows.size() == temps.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].t1 < rows[i - 1].t1);
        CHECK(rows[i].t2 < rows[i - 1].t2);
    }
    CHECK_THROWS_AS(t1_rate(model(), design, pot4000(), modes8(), registry(),
                            230e-9, 0.0),
                    std::invalid_argument);
}

TEST_CASE("dephasing stays a fixed fraction of relaxation") {
    const RegisterDesign design = default_design();
    const std::vector<double> xs = {150e-9, 200e-9, 250e-9, 300e-9};
    const std::vector<SweepRow> rows = sweep_x(
        model(), design, pot4000(), modes8(), registry(), xs, {3.0, 300.0});
    REQUIRE(rows.size() == 8);
    for (const SweepRow& r : rows) {
        // Gamma_2 = (1/2 + 1/32) Gamma_1 makes T2/T1 = 32/17 identically.
        CHECK(r.t2 / r.t1 == doctest::Approx(32.0 / 17.0).epsilon(1e-12));
        CHECK(r.t2 <= 2.0 * r.t1);
    }

    // Position and temperature factorize: T1(x,T)/T1(x,T') is x-independent.
    std::map<double, std::map<double, double>> t1;
    for (const SweepRow& r : rows) t1[r.x][r.temp] = r.t1;
    const double ref = t1[xs[0]][3.0] / t1[xs[0]][300.0];
    for (const double x : xs) {
        CHECK(t1[x][3.0] / t1[x][300.0] ==
              doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("lifetimes improve monotonically away from the stripe") {
    const RegisterDesign design = default_design();
    std::vector<double> xs;
    for (double x = 150e-9; x <= 326e-9; x += 25e-9) xs.push_back(x);
    REQUIRE(xs.size() == 8);
    for (const double temp : {3.0, 300.0}) {
        const std::vector<SweepRow> rows = sweep_x(
            model(), design, pot4000(), modes8(), registry(), xs, {temp});
        REQUIRE(rows.size() == 8);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].t1 > rows[i - 1].t1);
            CHECK(rows[i].t2 > rows[i - 1].t2);
        }
        if (temp == 3.0) {
            CHECK(rows[0].t1 == doctest::Approx(0.3930).epsilon(2e-3));
            CHECK(rows[4].t1 == doctest::Approx(2.6732).epsilon(2e-3));
            CHECK(rows[7].t1 == doctest::Approx(3.4277).epsilon(2e-3));
        } else {
            CHECK(rows[0].t1 == doctest::Approx(4.0269e-3).epsilon(2e-3));
            CHECK(rows[7].t1 == doctest::Approx(35.1181e-3).epsilon(2e-3));
        }
    }
}

TEST_CASE("only even modes couple to the midline qubit") {
    const double pinned_g[8] = {-14.93777, 0.0, -9.971245, 0.0,
                                -7.078711, 0.0, 18.53451, 0.0};
    for (int i = 0; i < 8; ++i) {
        const double g =
            mode_coupling(stripe(), py(), pot4000(), modes8()[i], 230e-9);
        if (i % 2 == 1) {
            CHECK(g == 0.0);  // parity exactness, not a tolerance
        } else {
            CHECK(g == doctest::Approx(pinned_g[i]).epsilon(1e-4));
        }
    }
    CHECK_THROWS_AS(
        mode_coupling(stripe(), py(), pot4000(), modes8()[0], 30e-9),
        std::invalid_argument);
    ModeSolution wrong = modes8()[0];
    wrong.psi.pop_back();
    CHECK_THROWS_AS(
        mode_coupling(stripe(), py(), pot4000(), wrong, 230e-9),
        std::invalid_argument);
}

TEST_CASE("stronger magnets couple more strongly") {
    const MaterialParams dy = material_preset("dysprosium");
    const PotentialProfile pot_dy = build_potential(stripe(), dy, 0.0, 4000);
    const std::vector<ModeSolution> modes_dy =
        tm_eigensolve(pot_dy, 8).modes;

    double sum_py = 0.0, sum_dy = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double gp =
            mode_coupling(stripe(), py(), pot4000(), modes8()[i], 230e-9);
        const double gd =
            mode_coupling(stripe(), dy, pot_dy, modes_dy[i], 230e-9);
        sum_py += gp * gp;
        sum_dy += gd * gd;
    }
    CHECK(sum_py == doctest::Approx(716.1983).epsilon(1e-3));
    CHECK(sum_dy == doctest::Approx(2134.109).epsilon(1e-3));
    CHECK(sum_dy > sum_py);
    const double g0_dy =
        mode_coupling(stripe(), dy, pot_dy, modes_dy[0], 230e-9);
    CHECK(std::abs(g0_dy) ==
          doctest::Approx(29.621731).epsilon(1e-3));
}

TEST_CASE("far-detuned lines scale with the square of the linewidth") {
    const RegisterDesign design = default_design();
    const double b_far = qubit_field(230e-9) - 0.3;
    const std::vector<SpinWaveLine> one = {{0, 1, 0.0, b_far, 0.93}};

    DecoherenceModel wide;
    wide.gamma0 = 1.0;
    wide.g_ref = 1.0;
    wide.de_fmr = py().de_fmr;
    wide.x_ref = 230e-9;
    DecoherenceModel narrow = wide;
    narrow.de_fmr /= 2.0;

    const double rate_wide =
        t1_rate(wide, design, pot4000(), modes8(), one, 230e-9, 2.0);
    const double rate_narrow =
        t1_rate(narrow, design, pot4000(), modes8(), one, 230e-9, 2.0);
    REQUIRE(rate_wide > 0.0);
    // On the Lorentzian tail, L ~ (FWHM/2Δ)²: halving the width quarters it.
    CHECK(rate_narrow / rate_wide == doctest::Approx(0.25).epsilon(1e-2));
}

TEST_CASE("lines beyond the spectral window are dropped") {
    const RegisterDesign design = default_design();
    const double b_q = qubit_field(230e-9);
    const std::vector<SpinWaveLine> outside = {{0, 1, 0.0, b_q - 0.6, 0.93}};
    const double gone = t1_rate(model(), design, pot4000(), modes8(),
                                outside, 230e-9, 2.0);
    CHECK(gone == 0.0);
    const DecoherenceResult res = decoherence_at(
        model(), design, pot4000(), modes8(), outside, 230e-9, 2.0);
    CHECK(res.t1 == std::numeric_limits<double>::infinity());
    CHECK(res.per_mode.empty());

    const std::vector<SpinWaveLine> inside = {{0, 1, 0.0, b_q - 0.45, 0.93}};
    CHECK(t1_rate(model(), design, pot4000(), modes8(), inside, 230e-9,
                  2.0) > 0.0);
}

TEST_CASE("per-line breakdown sums to the total rate") {
    const RegisterDesign design = default_design();
    const DecoherenceResult at = decoherence_at(
        model(), design, pot4000(), modes8(), registry(), 230e-9, 2.0);
    // At the anchor every registry line sits within the 0.5 T window.
    REQUIRE(at.per_mode.size() == registry().size());
    double sum = 0.0;
    for (const RateContribution& c : at.per_mode) {
        if (c.n_z % 2 == 1) CHECK(c.rate == 0.0);
        CHECK(c.rate >= 0.0);
        sum += c.rate;
    }
    CHECK(sum == doctest::Approx(1.0 / at.t1).epsilon(1e-9));
}

TEST_CASE("zero linewidth degenerates loudly, not silently") {
    const RegisterDesign design = default_design();
    DecoherenceModel sharp;
    sharp.gamma0 = 1.0;
    sharp.g_ref = 1.0;
    sharp.de_fmr = 0.0;
    sharp.x_ref = 230e-9;

    const double b_q = qubit_field(230e-9);
    const std::vector<SpinWaveLine> crossing = {{0, 1, 0.0, b_q, 0.93}};
    CHECK_THROWS_AS(t1_rate(sharp, design, pot4000(), modes8(), crossing,
                            230e-9, 2.0),
                    std::domain_error);
    const std::vector<SpinWaveLine> detuned = {{0, 1, 0.0, b_q - 0.1, 0.93}};
    CHECK(t1_rate(sharp, design, pot4000(), modes8(), detuned, 230e-9, 2.0) ==
          0.0);
}

TEST_CASE("calibration and rate evaluation validate their inputs") {
    const RegisterDesign design = default_design();

    // A registry line referring to an unsolved mode is a hard error.
    const std::vector<SpinWaveLine> orphan = {
        {12, 1, 0.0, qubit_field(230e-9), 0.9}};
    CHECK_THROWS_AS(t1_rate(model(), design, pot4000(), modes8(), orphan,
                            230e-9, 2.0),
                    std::invalid_argument);

    CHECK_THROWS_AS(
        calibrate(design, pot4000(), {}, registry(), anchor()),
        std::invalid_argument);
    CHECK_THROWS_AS(
        calibrate(design, pot4000(), modes8(), {}, anchor()),
        std::invalid_argument);
    CHECK_THROWS_AS(calibrate(design, pot4000(), modes8(), registry(),
                              Anchor{230e-9, 2.0, -1.0}),
                    std::invalid_argument);

    // An anchor where nothing couples cannot fix gamma0.
    ModeSolution lone = modes8()[1];  // odd parity: zero coupling
    lone.n_z = 0;
    const std::vector<ModeSolution> silent = {lone};
    const std::vector<SpinWaveLine> silent_line = {
        {0, 1, 0.0, qubit_field(230e-9), 0.9}};
    CHECK_THROWS_AS(
        calibrate(design, pot4000(), silent, silent_line, anchor()),
        std::runtime_error);
}
