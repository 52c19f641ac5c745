#pragma once

#include <vector>

#include "stripefield/geometry.hpp"
#include "stripefield/material.hpp"

namespace stripefield {

/**
 * Effective 1D confining potential of the spin-wave problem,
 * v(z) = b0 + B_z(0, z), sampled at the midpoints of a uniform cell grid
 * spanning [-w_z/2, +w_z/2]. Nodes sit half a cell away from the domain
 * edges, so they never touch the charged faces, and the cell count is even,
 * so the symmetry plane z = 0 coincides with a cell boundary and v is
 * mirror-symmetric to the last bit.
 */
struct PotentialProfile {
    std::vector<double> z;  ///< cell midpoints [m]
    std::vector<double> v;  ///< potential values [T]
    double dz;              ///< cell width [m]
    double d_ex;            ///< exchange coefficient [T m^2]
    double b0;              ///< rigid field offset [T]
    double w_z;             ///< domain width [m]
};

/**
 * Build the confining potential on an n_grid-cell grid (odd counts are
 * rounded up to even; n_grid >= 801 required).
 *
 * @throws std::invalid_argument when n_grid < 801.
 */
PotentialProfile build_potential(const StripeGeometry& geom,
                                 const MaterialParams& mat, double b0,
                                 int n_grid);

}  // namespace stripefield
