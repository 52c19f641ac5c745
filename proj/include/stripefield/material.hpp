#pragma once

#include <string>

#include "stripefield/constants.hpp"

namespace stripefield {

/**
 * Ferromagnet parameters.
 *
 * `b_sat` is the saturation induction mu_0*M_sat in tesla, `a_exch` the
 * exchange stiffness in J/m, `g_fm` the ferromagnet g-factor, and `de_fmr`
 * the resonance linewidth as an energy FWHM in joules.
 */
struct MaterialParams {
    double b_sat;
    double a_exch;
    double g_fm;
    double de_fmr;
    bool approximate = false;  ///< preset extrapolated from incomplete data

    /// Saturation magnetization M_sat = b_sat/mu_0 [A/m].
    double m_sat() const { return b_sat / consts::mu_0; }

    /// Exchange coefficient of the 1D mode equation, 2*a_exch/M_sat [T m^2].
    double d_ex() const { return 2.0 * a_exch / m_sat(); }

    /// @throws std::invalid_argument when any parameter is non-positive.
    void validate() const;
};

/**
 * Electron-spin qubit parameters: g-factor and inhomogeneous linewidth.
 */
struct QubitSpec {
    double g_q = 2.0;
    double linewidth_G = 1.0;  ///< FWHM in gauss

    /// @throws std::invalid_argument when any parameter is non-positive.
    void validate() const;
};

/**
 * Built-in material presets: "permalloy" (b_sat = 1.13 T, a_exch =
 * 1.3e-11 J/m, g = 2.0, linewidth 3 ueV) and "dysprosium" (three times the
 * permalloy saturation, other values copied and flagged approximate).
 *
 * @throws std::invalid_argument for unknown names.
 */
MaterialParams material_preset(const std::string& name);

}  // namespace stripefield
