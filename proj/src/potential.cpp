#include "stripefield/potential.hpp"

#include <stdexcept>

#include "stripefield/stray_field.hpp"

namespace stripefield {

PotentialProfile build_potential(const StripeGeometry& geom,
                                 const MaterialParams& mat, double b0,
                                 int n_grid) {
    geom.validate();
    mat.validate();
    if (n_grid < 801) {
        throw std::invalid_argument("potential grid needs n_grid >= 801");
    }
    const int n = n_grid + (n_grid % 2);  // even cell count, z = 0 on a boundary

    PotentialProfile pot;
    pot.dz = geom.w_z / n;
    pot.d_ex = mat.d_ex();
    pot.b0 = b0;
    pot.w_z = geom.w_z;
    pot.z.resize(n);
    pot.v.resize(n);
    for (int i = 0; i < n / 2; ++i) {
        const double zc = (i + 0.5) * pot.dz;  // upper half, mirrored below
        const double val = b0 + stray_bz(geom, mat, 0.0, zc);
        pot.z[n / 2 + i] = zc;
        pot.v[n / 2 + i] = val;
        pot.z[n / 2 - 1 - i] = -zc;
        pot.v[n / 2 - 1 - i] = val;
    }
    return pot;
}

}  // namespace stripefield
