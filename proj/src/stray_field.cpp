#include "stripefield/stray_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "stripefield/constants.hpp"

namespace stripefield {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_material_geometry(const StripeGeometry& geom,
                             const MaterialParams& mat) {
    geom.validate();
    mat.validate();
}

/// True when (x, z) lies inside the guard band of a charged face z = +-w/2.
bool on_charged_face(const StripeGeometry& g, double x, double z) {
    const bool near_face = std::abs(z - g.w_z / 2) < face_guard ||
                           std::abs(z + g.w_z / 2) < face_guard;
    return near_face && std::abs(x) <= g.t_x / 2 + face_guard;
}

void guard_faces(const StripeGeometry& g, double x, double z) {
    if (on_charged_face(g, x, z)) {
        throw std::domain_error(
            "field evaluation inside the guard band of a charged face "
            "z = +-w_z/2");
    }
}

/// Angular kernel of one charged strip at signed distance d. The principal
/// branch is the physical one: both terms jump together when d changes sign
/// beside the strip (continuous difference), and the residual 2*pi jump sits
/// on the charged face itself, which the guard band excludes.
double strip_f(double x, double d, double t_x) {
    return std::atan((x + t_x / 2) / d) - std::atan((x - t_x / 2) / d);
}

/// Logarithmic kernel of one charged strip at distance d.
double strip_g(double x, double d, double t_x) {
    const double p = x + t_x / 2;
    const double m = x - t_x / 2;
    return std::log((p * p + d * d) / (m * m + d * d));
}

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
/// Legendre polynomial (deterministic, machine-precision).
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

/**
 * Surface integral of the Coulombian kernel over both charged faces.
 * `component` selects the field component: 0 -> x, 2 -> z. The x' direction
 * uses n_quad Gauss-Legendre nodes. The y' direction is integrated over
 * geometrically graded panels growing away from the observation y — the
 * integrand decays like 1/r^3, so fixed-order panels that double in width
 * resolve it for any stripe length.
 */
double oracle_component(const StripeGeometry& geom, const MaterialParams& mat,
                        double x, double y, double z, int n_quad,
                        int component) {
    check_material_geometry(geom, mat);
    if (n_quad < 64) {
        throw std::invalid_argument("oracle quadrature needs n_quad >= 64");
    }

    std::vector<double> xn, xw, pn, pw;
    gauss_legendre(n_quad, xn, xw);
    gauss_legendre(16, pn, pw);

    // Panel edges along y' relative to the observation y, growing
    // geometrically from w_z/2 until the stripe end is covered.
    const double y_lo = -geom.l_y / 2, y_hi = geom.l_y / 2;
    std::vector<double> edges{0.0};
    double width = geom.w_z / 2;
    const double reach = std::max(std::abs(y_lo - y), std::abs(y_hi - y));
    while (edges.back() < reach) {
        edges.push_back(edges.back() + width);
        width *= 2.0;
    }

    const double sigma = mat.m_sat();  // face charge density +-M_sat
    double total = 0.0;
    for (int face = 0; face < 2; ++face) {
        const double zf = (face == 0 ? +geom.w_z / 2 : -geom.w_z / 2);
        const double sgn = (face == 0 ? +1.0 : -1.0);
        const double dz_f = z - zf;
        double face_sum = 0.0;
        for (int ix = 0; ix < n_quad; ++ix) {
            const double xp = xn[ix] * geom.t_x / 2;
            const double dx = x - xp;
            const double rho2 = dx * dx + dz_f * dz_f;
            double y_sum = 0.0;
            for (int side = 0; side < 2; ++side) {
                for (size_t e = 0; e + 1 < edges.size(); ++e) {
                    double a = y + (side == 0 ? edges[e] : -edges[e + 1]);
                    double b = y + (side == 0 ? edges[e + 1] : -edges[e]);
                    a = std::max(a, y_lo);
                    b = std::min(b, y_hi);
                    if (a >= b) continue;
                    const double half = (b - a) / 2, mid = (a + b) / 2;
                    for (int iy = 0; iy < 16; ++iy) {
                        const double yp = mid + half * pn[iy];
                        const double dy = y - yp;
                        const double r2 = rho2 + dy * dy;
                        const double r = std::sqrt(r2);
                        const double num = (component == 0 ? dx : dz_f);
                        y_sum += pw[iy] * half * num / (r2 * r);
                    }
                }
            }
            face_sum += xw[ix] * (geom.t_x / 2) * y_sum;
        }
        total += sgn * face_sum;
    }
    return consts::mu_0 / (4.0 * std::numbers::pi) * sigma * total;
}

}  // namespace

double stray_bz(const StripeGeometry& geom, const MaterialParams& mat,
                double x, double z) {
    check_material_geometry(geom, mat);
    guard_faces(geom, x, z);
    const double f = strip_f(x, geom.w_z / 2 - z, geom.t_x) +
                     strip_f(x, geom.w_z / 2 + z, geom.t_x);
    return -(mat.b_sat / two_pi) * f;
}

double stray_bx(const StripeGeometry& geom, const MaterialParams& mat,
                double x, double z) {
    check_material_geometry(geom, mat);
    guard_faces(geom, x, z);
    const double g = strip_g(x, geom.w_z / 2 - z, geom.t_x) -
                     strip_g(x, geom.w_z / 2 + z, geom.t_x);
    return +(mat.b_sat / (2.0 * two_pi)) * g;
}

double stray_bz_gradient_x(const StripeGeometry& geom,
                           const MaterialParams& mat, double x, double z) {
    check_material_geometry(geom, mat);
    guard_faces(geom, x, z);
    const double p = x + geom.t_x / 2;
    const double m = x - geom.t_x / 2;
    double sum = 0.0;
    for (const double d : {geom.w_z / 2 - z, geom.w_z / 2 + z}) {
        sum += d / (d * d + p * p) - d / (d * d + m * m);
    }
    return -(mat.b_sat / two_pi) * sum;
}

double oracle_bz_3d(const StripeGeometry& geom, const MaterialParams& mat,
                    double x, double y, double z, int n_quad) {
    return oracle_component(geom, mat, x, y, z, n_quad, 2);
}

double oracle_bx_3d(const StripeGeometry& geom, const MaterialParams& mat,
                    double x, double y, double z, int n_quad) {
    return oracle_component(geom, mat, x, y, z, n_quad, 0);
}

}  // namespace stripefield
