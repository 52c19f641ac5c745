#pragma once

#include "stripefield/geometry.hpp"
#include "stripefield/material.hpp"

namespace stripefield {

/// One field evaluation on the y = 0 plane (meters, tesla).
struct FieldSample {
    double x;
    double z;
    double b_x;
    double b_z;
};

/**
 * Guard band around the charged faces z = +-w_z/2 (meters). Evaluations with
 * |x| <= t_x/2 closer than this to a charged face throw std::domain_error
 * instead of returning a mid-jump or divergent surface value.
 */
inline constexpr double face_guard = 1e-12;

/**
 * z-component of the stripe's stray (dipolar) field at (x, z), y = 0 plane,
 * in tesla. Infinite-stripe two-charged-strip closed form:
 *
 *   B_z(x,z) = -(b_sat/2pi) * [F(x, w_z/2 - z) + F(x, w_z/2 + z)],
 *   F(x, d)  = atan((x + t_x/2)/d) - atan((x - t_x/2)/d),
 *
 * valid inside and outside the stripe and continuous across the uncharged
 * faces x = +-t_x/2.
 *
 * @throws std::domain_error on the charged faces (see face_guard).
 */
double stray_bz(const StripeGeometry& geom, const MaterialParams& mat,
                double x, double z);

/**
 * x-component of the stray field, logarithmic counterpart of stray_bz:
 *
 *   B_x(x,z) = +(b_sat/4pi) * [G(x, w_z/2 - z) - G(x, w_z/2 + z)],
 *   G(x, d)  = ln( ((x + t_x/2)^2 + d^2) / ((x - t_x/2)^2 + d^2) ).
 *
 * The leading sign makes the pair (B_x, B_z) curl-free away from the
 * charged faces; B_x vanishes on the z = 0 mid-plane by mirror symmetry.
 *
 * @throws std::domain_error on the charged faces (see face_guard).
 */
double stray_bx(const StripeGeometry& geom, const MaterialParams& mat,
                double x, double z);

/**
 * Analytic d(B_z)/dx in T/m (no finite differences).
 *
 * @throws std::domain_error on the charged faces (see face_guard).
 */
double stray_bz_gradient_x(const StripeGeometry& geom,
                           const MaterialParams& mat, double x, double z);

/**
 * Validation oracle: direct 2D numerical surface integration of the
 * Coulombian kernel over the two charged faces of the finite-length stripe,
 * evaluated at (x, y, z). Gauss-Legendre with `n_quad` nodes across the face
 * width; the length direction uses geometrically graded panels (16-node
 * Gauss-Legendre each) so the needle-like integrand stays resolved at any
 * aspect ratio.
 *
 * @throws std::invalid_argument when n_quad < 64.
 */
double oracle_bz_3d(const StripeGeometry& geom, const MaterialParams& mat,
                    double x, double y, double z, int n_quad);

/// x-component counterpart of oracle_bz_3d.
double oracle_bx_3d(const StripeGeometry& geom, const MaterialParams& mat,
                    double x, double y, double z, int n_quad);

}  // namespace stripefield
