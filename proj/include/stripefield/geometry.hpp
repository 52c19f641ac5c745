#pragma once

namespace stripefield {

/**
 * Uniformly magnetized nanostripe, stripe-centered coordinates:
 * x in [-t_x/2, +t_x/2] (width), z in [-w_z/2, +w_z/2] (depth),
 * y in [-l_y/2, +l_y/2] (length), magnetization saturated along +z.
 * All lengths in meters.
 */
struct StripeGeometry {
    double t_x;
    double w_z;
    double l_y;

    /**
     * @throws std::invalid_argument when a dimension is non-positive or the
     * aspect ratios violate the long-stripe regime (w_z >= t_x and
     * l_y >= 10*w_z), which the 2D field model relies on.
     */
    void validate() const;
};

}  // namespace stripefield
