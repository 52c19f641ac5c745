#include "stripefield/lines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stripefield/constants.hpp"

namespace stripefield {

std::vector<SpinWaveLine> assemble_lines(
    const std::vector<ModeSolution>& modes, const StripeGeometry& geom,
    const MaterialParams& mat, double nu, int n_x_max) {
    geom.validate();
    mat.validate();
    if (n_x_max < 1) {
        throw std::invalid_argument("need n_x_max >= 1 across-width indices");
    }
    const double b_fmr = field_from_frequency(nu, mat.g_fm);
    const double d_ex = mat.d_ex();

    std::vector<SpinWaveLine> lines;
    lines.reserve(modes.size() * n_x_max);
    for (const ModeSolution& m : modes) {
        for (int n_x = 1; n_x <= n_x_max; ++n_x) {
            const double k_x = n_x * std::numbers::pi / geom.t_x;
            const double b_total = m.b_n + d_ex * k_x * k_x;
            const double b_res = b_fmr - b_total;
            if (b_res <= 0.0) continue;  // never reached in a field sweep
            lines.push_back({m.n_z, n_x, b_total, b_res, m.edge_weight});
        }
    }
    std::sort(lines.begin(), lines.end(),
              [](const SpinWaveLine& a, const SpinWaveLine& b) {
                  return a.b_res > b.b_res;
              });
    return lines;
}

GapReport highest_gap(std::vector<SpinWaveLine> lines) {
    std::sort(lines.begin(), lines.end(),
              [](const SpinWaveLine& a, const SpinWaveLine& b) {
                  return a.b_res > b.b_res;
              });
    // Collapse coincident lines (unresolved parity doublets).
    constexpr double resolve = 1e-4;  // 0.1 mT
    std::vector<double> distinct;
    for (const SpinWaveLine& l : lines) {
        if (distinct.empty() || distinct.back() - l.b_res > resolve) {
            distinct.push_back(l.b_res);
        }
        if (distinct.size() == 2) break;
    }
    if (distinct.size() < 2) {
        throw std::invalid_argument(
            "need at least two distinct resonance lines for a gap");
    }
    return {distinct[0], distinct[1], distinct[0] - distinct[1]};
}

}  // namespace stripefield
