#include "stripefield/registry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "stripefield/constants.hpp"

namespace stripefield {

void RegisterDesign::validate() const {
    geom.validate();
    mat.validate();
    qubit.validate();
    if (!(nu > 0.0)) {
        throw std::invalid_argument("operating frequency must be positive");
    }
    if (!(l_inter > 0.0)) {
        throw std::invalid_argument("qubit spacing must be positive");
    }
    if (positions.empty()) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (const double x : positions) {
        if (std::abs(x) <= geom.t_x / 2) {
            throw std::invalid_argument(
                "qubit positions must lie outside the stripe");
        }
        if (x <= prev) {
            throw std::invalid_argument(
                "qubit positions must be strictly increasing");
        }
        prev = x;
    }
}

ResonanceLine qubit_line(const RegisterDesign& design, double x) {
    if (std::abs(x) <= design.geom.t_x / 2) {
        throw std::invalid_argument(
            "qubit positions must lie outside the stripe");
    }
    const double b_res = field_from_frequency(design.nu, design.qubit.g_q) -
                         stray_bz(design.geom, design.mat, x, 0.0);
    return {b_res, LineKind::qubit, design.qubit.linewidth_G, 1.0};
}

double ising_ratio(const RegisterDesign& design, double x) {
    const double grad = stray_bz_gradient_x(design.geom, design.mat, x, 0.0);
    const double detuning =
        std::abs(design.qubit.g_q * consts::mu_b * grad * design.l_inter);
    const double g2 = design.qubit.g_q * design.qubit.g_q;
    const double coupling = consts::mu_0 * consts::mu_b * consts::mu_b * g2 /
                            (4.0 * std::numbers::pi * design.l_inter *
                             design.l_inter * design.l_inter);
    return detuning / coupling;
}

OverlapReport overlap_check(const std::vector<ResonanceLine>& qubit_lines,
                            const std::vector<ResonanceLine>& spinwave_lines,
                            double margin_G) {
    if (qubit_lines.empty() || spinwave_lines.empty()) {
        throw std::invalid_argument(
            "overlap check needs both qubit and spin-wave lines");
    }
    OverlapReport report;
    report.pass = true;
    report.qubits.reserve(qubit_lines.size());
    for (const ResonanceLine& q : qubit_lines) {
        OverlapEntry entry{q.b_res,
                           std::numeric_limits<double>::infinity(), true};
        for (const ResonanceLine& s : spinwave_lines) {
            const double clearance = tesla_to_gauss(std::abs(q.b_res - s.b_res));
            const double needed = margin_G + (q.width_G + s.width_G) / 2;
            entry.clearance_G = std::min(entry.clearance_G, clearance);
            if (clearance <= needed) entry.pass = false;
        }
        report.pass = report.pass && entry.pass;
        report.qubits.push_back(entry);
    }
    return report;
}

long addressable_count(double interval_G, double linewidth_G,
                       double packing) {
    if (!(interval_G > 0.0) || !(linewidth_G > 0.0) || !(packing > 0.0)) {
        throw std::invalid_argument(
            "addressability needs positive interval, linewidth and packing");
    }
    return static_cast<long>(std::floor(interval_G / (packing * linewidth_G)));
}

std::vector<double> full_spectrum(const std::vector<ResonanceLine>& lines,
                                  const std::vector<double>& b_grid) {
    for (std::size_t i = 1; i < b_grid.size(); ++i) {
        if (!(b_grid[i] > b_grid[i - 1])) {
            throw std::invalid_argument(
                "field grid must be strictly increasing");
        }
    }
    std::vector<double> signal(b_grid.size(), 0.0);
    for (const ResonanceLine& line : lines) {
        const double hwhm = gauss_to_tesla(line.width_G) / 2;
        for (std::size_t i = 0; i < b_grid.size(); ++i) {
            const double u = (b_grid[i] - line.b_res) / hwhm;
            signal[i] += line.amplitude / (1.0 + u * u);
        }
    }
    return signal;
}

}  // namespace stripefield
