#pragma once

#include "stripefield/stray_field.hpp"

namespace stripefield {

/// Value of the homogeneity functional C at one position.
struct HomogeneityResult {
    double x;        ///< [m]
    double c_value;  ///< [T m]
};

/**
 * Homogeneity functional of the stray field,
 *
 *   C(x) = integral_{-z_half}^{+z_half} (B_z(x,z) - B_z(x,0)) dz,
 *
 * computed by adaptive Simpson quadrature to 1e-12 T*m absolute tolerance.
 *
 * @throws std::domain_error for x inside the stripe (|x| <= t_x/2);
 * @throws std::runtime_error when the quadrature fails to converge.
 */
HomogeneityResult homogeneity_c(const StripeGeometry& geom,
                                const MaterialParams& mat, double x,
                                double z_half = 100e-9);

/**
 * Position where C(x) crosses zero, bisected to 0.1 nm on the bracket
 * (t_x/2 + 1 nm, 5*w_z).
 *
 * @throws std::runtime_error when the bracket does not straddle a sign
 * change.
 */
double find_x_optim(const StripeGeometry& geom, const MaterialParams& mat);

}  // namespace stripefield
