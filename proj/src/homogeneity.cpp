#include "stripefield/homogeneity.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace stripefield {

namespace {

/// One adaptive-Simpson refinement step on [a, b] with precomputed endpoint
/// and midpoint samples. Tolerance is in absolute integral units (T*m).
double simpson_adapt(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
    if (depth <= 0) {
        throw std::runtime_error("adaptive quadrature failed to converge");
    }
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2, rm = (m + b) / 2;
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15 * tol) {
        return left + right + delta / 15;
    }
    return simpson_adapt(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_adapt(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson_adapt(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

HomogeneityResult homogeneity_c(const StripeGeometry& geom,
                                const MaterialParams& mat, double x,
                                double z_half) {
    if (z_half <= 0.0) {
        throw std::invalid_argument(
            "homogeneity window half-width must be positive");
    }
    if (std::abs(x) <= geom.t_x / 2) {
        throw std::domain_error(
            "homogeneity functional is defined outside the stripe only");
    }
    const double b_center = stray_bz(geom, mat, x, 0.0);
    const auto dev = [&](double z) {
        return stray_bz(geom, mat, x, z) - b_center;
    };
    return {x, integrate(dev, -z_half, z_half, 1e-12)};
}

double find_x_optim(const StripeGeometry& geom, const MaterialParams& mat) {
    // C(x) changes sign exactly once beyond the surface: the window-averaged
    // field overshoots the center value close in and undershoots it far out.
    double lo = geom.t_x / 2 + 1e-9;
    double hi = 5.0 * geom.w_z;
    double c_lo = homogeneity_c(geom, mat, lo).c_value;
    const double c_hi = homogeneity_c(geom, mat, hi).c_value;
    if (c_lo == 0.0) return lo;
    if (c_hi == 0.0) return hi;
    if (std::signbit(c_lo) == std::signbit(c_hi)) {
        throw std::runtime_error(
            "homogeneity functional does not change sign on the search "
            "interval");
    }
    while (hi - lo > 1e-10) {
        const double mid = (lo + hi) / 2;
        const double c_mid = homogeneity_c(geom, mat, mid).c_value;
        if (c_mid == 0.0) return mid;
        if (std::signbit(c_mid) == std::signbit(c_lo)) {
            lo = mid;
            c_lo = c_mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace stripefield
