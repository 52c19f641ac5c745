#pragma once

#include <vector>

#include "stripefield/lines.hpp"
#include "stripefield/stray_field.hpp"

namespace stripefield {

/**
 * A qubit-register design: stripe, material, qubit parameters, operating
 * frequency, and the chain of qubit positions along x (y = z = 0).
 */
struct RegisterDesign {
    StripeGeometry geom;
    MaterialParams mat;
    QubitSpec qubit;
    double nu;                      ///< operating frequency [Hz]
    std::vector<double> positions;  ///< qubit x positions [m], strictly increasing
    double l_inter;                 ///< nearest-neighbor spacing [m]

    /// @throws std::invalid_argument on unordered/inside-stripe positions or
    ///         non-positive spacing; validates the nested parameter sets.
    void validate() const;
};

enum class LineKind { spin_wave, qubit };

/// One line of the combined field-sweep spectrum.
struct ResonanceLine {
    double b_res;     ///< [T]
    LineKind kind;
    double width_G;   ///< FWHM [gauss]
    double amplitude = 1.0;
};

/**
 * Qubit resonance line at position x: the static field must make up for the
 * local (negative) stray field, b_res = h*nu/(g_q*mu_B) - B_z(x, 0).
 *
 * @throws std::invalid_argument when x is not outside the stripe.
 */
ResonanceLine qubit_line(const RegisterDesign& design, double x);

/**
 * Effective-Ising figure of merit at position x: gradient detuning of two
 * neighbors over their dipolar coupling, both in joules,
 *
 *   |g_q*mu_B*(dB_z/dx)*l_inter| / (mu_0*mu_B^2*g_q^2 / (4*pi*l_inter^3)).
 */
double ising_ratio(const RegisterDesign& design, double x);

struct OverlapEntry {
    double b_res;        ///< qubit line [T]
    double clearance_G;  ///< distance to the nearest spin-wave line [gauss]
    bool pass;
};

struct OverlapReport {
    std::vector<OverlapEntry> qubits;
    bool pass;
};

/**
 * Spectral-overlap clearance: each qubit line against every spin-wave line.
 * A pair is clear when |b_q - b_sw| > margin_G + (width_q + width_sw)/2;
 * the report carries the minimum clearance per qubit and the global verdict.
 *
 * @throws std::invalid_argument when either list is empty.
 */
OverlapReport overlap_check(const std::vector<ResonanceLine>& qubit_lines,
                            const std::vector<ResonanceLine>& spinwave_lines,
                            double margin_G);

/**
 * Number of individually addressable qubits in a spectral interval:
 * floor(interval_G / (packing * linewidth_G)); the default packing of 2.0
 * allots one qubit per two linewidths.
 *
 * @throws std::invalid_argument for non-positive interval or linewidth.
 */
long addressable_count(double interval_G, double linewidth_G,
                       double packing = 2.0);

/**
 * Field-sweep absorption spectrum: sum of unit-peak Lorentzians (scaled by
 * each line's amplitude) over the supplied field grid [T].
 *
 * @throws std::invalid_argument when b_grid is not strictly increasing.
 */
std::vector<double> full_spectrum(const std::vector<ResonanceLine>& lines,
                                  const std::vector<double>& b_grid);

}  // namespace stripefield
