#include <stdexcept>
#include <string>

#include "stripefield/constants.hpp"
#include "stripefield/geometry.hpp"
#include "stripefield/material.hpp"

namespace stripefield {

double field_from_frequency(double nu, double g) {
    if (!(nu > 0.0) || !(g > 0.0)) {
        throw std::invalid_argument(
            "resonance condition needs positive frequency and g-factor");
    }
    return consts::h * nu / (g * consts::mu_b);
}

void MaterialParams::validate() const {
    if (!(b_sat > 0.0) || !(a_exch > 0.0) || !(g_fm > 0.0) ||
        !(de_fmr > 0.0)) {
        throw std::invalid_argument(
            "material parameters must all be strictly positive");
    }
}

void QubitSpec::validate() const {
    if (!(g_q > 0.0) || !(linewidth_G > 0.0)) {
        throw std::invalid_argument(
            "qubit g-factor and linewidth must be strictly positive");
    }
}

MaterialParams material_preset(const std::string& name) {
    if (name == "permalloy") {
        return {1.13, 1.3e-11, 2.0, 3e-6 * consts::ev, false};
    }
    if (name == "dysprosium") {
        // Only the saturation is well established; exchange, g-factor and
        // linewidth are carried over from permalloy and flagged as such.
        return {3.0 * 1.13, 1.3e-11, 2.0, 3e-6 * consts::ev, true};
    }
    throw std::invalid_argument("unknown material preset: " + name);
}

void StripeGeometry::validate() const {
    if (!(t_x > 0.0) || !(w_z > 0.0) || !(l_y > 0.0)) {
        throw std::invalid_argument("stripe dimensions must be positive");
    }
    if (w_z < t_x || l_y < 10.0 * w_z) {
        throw std::invalid_argument(
            "stripe must satisfy w_z >= t_x and l_y >= 10*w_z for the "
            "long-stripe field model");
    }
}

}  // namespace stripefield
