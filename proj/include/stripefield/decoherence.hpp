#pragma once

#include <vector>

#include "stripefield/registry.hpp"

namespace stripefield {

/**
 * Phenomenological golden-rule decoherence model for magnon-induced qubit
 * relaxation:
 *
 *   Gamma_1 = gamma0 * coth(h*nu/(2*k_B*T)) * sum_lines |g_c/g_ref|^2 * L(delta)
 *   Gamma_2 = Gamma_1/2 + alpha_phi*Gamma_1
 *
 * with L a unit-peak Lorentzian of FWHM de_fmr in the energy detuning delta
 * between the qubit and the mode at the operating field. gamma0 absorbs the
 * unpublished microscopic prefactors and is fixed by a single calibration
 * anchor; g_ref is the lowest-edge-mode coupling at the calibration position,
 * so rescaling the saturation magnetization propagates into the rates
 * quadratically.
 */
struct DecoherenceModel {
    double gamma0 = 0.0;          ///< bare rate scale [1/s]
    double alpha_phi = 1.0 / 32;  ///< pure-dephasing fraction of Gamma_1
    double de_fmr = 0.0;          ///< Lorentzian FWHM [J]
    double g_ref = 1.0;           ///< reference coupling [T]
    double x_ref = 0.0;           ///< calibration position [m]
};

/// Per-line rate contribution [1/s].
struct RateContribution {
    int n_z;
    int n_x;
    double rate;
};

struct DecoherenceResult {
    double t1;  ///< [s]
    double t2;  ///< [s]
    std::vector<RateContribution> per_mode;
};

/// Calibration anchor: position [m], temperature [K], target T1 [s].
struct Anchor {
    double x;
    double temp;
    double t1;
};

/**
 * Transverse stray field at (x, 0) per unit excitation of a 1D mode: the
 * mode's dynamic magnetization delta-m_x(z) = psi(z) deposits surface
 * charges +-psi(z) on the faces x = +-t_x/2, and the resulting 2D
 * line-charge field is integrated along z,
 *
 *   g_c(x) = (mu_0*M_sat/2pi) * integral psi(z) * [ (x - t_x/2)/((x - t_x/2)^2 + z^2)
 *                                                 - (x + t_x/2)/((x + t_x/2)^2 + z^2) ] dz.
 *
 * Odd-parity modes integrate to zero against the even kernel — they do not
 * couple to a qubit on the z = 0 line.
 *
 * @throws std::invalid_argument when x is not outside the stripe.
 */
double mode_coupling(const StripeGeometry& geom, const MaterialParams& mat,
                     const PotentialProfile& pot, const ModeSolution& mode,
                     double x);

/**
 * Fix gamma0 so t1_rate reproduces the anchor exactly; alpha_phi defaults to
 * 1/32 and de_fmr is taken from the design's material.
 *
 * @throws std::runtime_error when every coupling vanishes at the anchor
 * (calibration impossible).
 */
DecoherenceModel calibrate(const RegisterDesign& design,
                           const PotentialProfile& pot,
                           const std::vector<ModeSolution>& modes,
                           const std::vector<SpinWaveLine>& lines,
                           const Anchor& anchor);

/**
 * Relaxation rate Gamma_1 [1/s] for a qubit at x, resonant with the drive
 * at the operating field b0(x) = h*nu/(g_q*mu_B) - B_z(x,0). Lines farther
 * than 0.5 T from the qubit line are skipped (their Lorentzian tails
 * contribute below 1e-6 of the total).
 *
 * @throws std::domain_error on exact line crossing with zero linewidth.
 */
double t1_rate(const DecoherenceModel& model, const RegisterDesign& design,
               const PotentialProfile& pot,
               const std::vector<ModeSolution>& modes,
               const std::vector<SpinWaveLine>& lines, double x, double temp);

/// Gamma_2 = Gamma_1/2 + alpha_phi*Gamma_1 [1/s].
double t2_rate(const DecoherenceModel& model, const RegisterDesign& design,
               const PotentialProfile& pot,
               const std::vector<ModeSolution>& modes,
               const std::vector<SpinWaveLine>& lines, double x, double temp);

/// T1, T2 and the per-line rate breakdown at one (x, temperature) point.
DecoherenceResult decoherence_at(const DecoherenceModel& model,
                                 const RegisterDesign& design,
                                 const PotentialProfile& pot,
                                 const std::vector<ModeSolution>& modes,
                                 const std::vector<SpinWaveLine>& lines,
                                 double x, double temp);

/// One row of a position/temperature sweep.
struct SweepRow {
    double x;     ///< [m]
    double temp;  ///< [K]
    double t1;    ///< [s]
    double t2;    ///< [s]
};

/// T1/T2 over a grid of positions, for each temperature.
std::vector<SweepRow> sweep_x(const DecoherenceModel& model,
                              const RegisterDesign& design,
                              const PotentialProfile& pot,
                              const std::vector<ModeSolution>& modes,
                              const std::vector<SpinWaveLine>& lines,
                              const std::vector<double>& xs,
                              const std::vector<double>& temps);

/// T1/T2 over a temperature grid at fixed position.
std::vector<SweepRow> sweep_temp(const DecoherenceModel& model,
                                 const RegisterDesign& design,
                                 const PotentialProfile& pot,
                                 const std::vector<ModeSolution>& modes,
                                 const std::vector<SpinWaveLine>& lines,
                                 double x, const std::vector<double>& temps);

}  // namespace stripefield
