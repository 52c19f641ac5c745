#pragma once

#include <vector>

#include "stripefield/eigensolve.hpp"

namespace stripefield {

/// One confined spin-wave line of the field-sweep spectrum.
struct SpinWaveLine {
    int n_z;            ///< 1D mode index
    int n_x;            ///< across-width index, >= 1
    double b_total;     ///< zero-field mode energy in field units: b_n + d_ex k_x^2 [T]
    double b_res;       ///< resonance field at the operating frequency [T]
    double edge_weight; ///< localization of the underlying 1D mode
};

/**
 * Assemble the resonance-line registry: every (n_z, n_x) combination of the
 * supplied 1D modes with the quantized across-width wavevector
 * k_x = n_x*pi/t_x (k_y = 0 only; a uniform drive couples to k_y ~ 0):
 *
 *   b_res = h*nu/(g_fm*mu_B) - b_n - d_ex*k_x^2.
 *
 * Modes must be solved at b0 = 0 (eigenvalues shift rigidly with b0). Lines
 * with non-positive resonance fields are dropped.
 */
std::vector<SpinWaveLine> assemble_lines(const std::vector<ModeSolution>& modes,
                                         const StripeGeometry& geom,
                                         const MaterialParams& mat, double nu,
                                         int n_x_max);

/// Two highest distinct resonance fields and their separation [T].
struct GapReport {
    double b_high;
    double b_second;
    double gap;
};

/**
 * The two highest distinct resonance fields and their separation. Lines
 * closer than 0.1 mT — the exponentially split parity doublets of the edge
 * wells coincide far below that — count as a single line.
 *
 * @throws std::invalid_argument with fewer than two distinct lines.
 */
GapReport highest_gap(std::vector<SpinWaveLine> lines);

}  // namespace stripefield
