#include "stripefield/decoherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "stripefield/constants.hpp"

namespace stripefield {

namespace {

/// Lines farther than this from the qubit line are dropped from the rate
/// sum; their Lorentzian tails are negligible against the resonant terms.
constexpr double line_window = 0.5;  // [T]

double coth(double x) { return 1.0 / std::tanh(x); }

/// Unit-peak Lorentzian of FWHM `gamma` at detuning `de`, both in joules.
double lorentzian(double de, double gamma) {
    if (gamma <= 0.0) {
        if (de == 0.0) {
            throw std::domain_error(
                "zero-linewidth line crossed exactly; the rate diverges");
        }
        return 0.0;
    }
    const double u = 2.0 * de / gamma;
    return 1.0 / (1.0 + u * u);
}

double thermal_factor(double nu, double temp) {
    if (!(temp > 0.0)) {
        throw std::invalid_argument("temperature must be positive");
    }
    return coth(consts::h * nu / (2.0 * consts::k_b * temp));
}

/// Shared rate kernel: per-line contributions at unit gamma0 and the total.
double rate_sum(const DecoherenceModel& model, const RegisterDesign& design,
                const PotentialProfile& pot,
                const std::vector<ModeSolution>& modes,
                const std::vector<SpinWaveLine>& lines, double x,
                std::vector<RateContribution>* breakdown) {
    const double b_q = field_from_frequency(design.nu, design.qubit.g_q) -
                       stray_bz(design.geom, design.mat, x, 0.0);
    // Couplings per 1D mode, indexed by n_z (lines reference them by index).
    std::vector<double> g_of(modes.size(),
                             std::numeric_limits<double>::quiet_NaN());
    for (const ModeSolution& m : modes) {
        g_of[m.n_z] = mode_coupling(design.geom, design.mat, pot, m, x);
    }
    double sum = 0.0;
    for (const SpinWaveLine& line : lines) {
        if (std::abs(line.b_res - b_q) > line_window) continue;
        if (line.n_z >= static_cast<int>(g_of.size()) ||
            std::isnan(g_of[line.n_z])) {
            throw std::invalid_argument(
                "line registry references a mode that was not supplied");
        }
        const double g_rel = g_of[line.n_z] / model.g_ref;
        const double de =
            design.qubit.g_q * consts::mu_b * (line.b_res - b_q);
        const double term =
            g_rel * g_rel * lorentzian(de, model.de_fmr);
        sum += term;
        if (breakdown) breakdown->push_back({line.n_z, line.n_x, term});
    }
    return sum;
}

}  // namespace

double mode_coupling(const StripeGeometry& geom, const MaterialParams& mat,
                     const PotentialProfile& pot, const ModeSolution& mode,
                     double x) {
    if (std::abs(x) <= geom.t_x / 2) {
        throw std::invalid_argument(
            "mode coupling is defined outside the stripe only");
    }
    if (mode.psi.size() != pot.z.size()) {
        throw std::invalid_argument("mode/grid size mismatch");
    }
    if (mode.parity < 0) return 0.0;  // odd against even kernel: exact zero
    const double xm = x - geom.t_x / 2;
    const double xp = x + geom.t_x / 2;
    double integral = 0.0;
    for (std::size_t i = 0; i < pot.z.size(); ++i) {
        const double z = pot.z[i];
        const double kernel =
            xm / (xm * xm + z * z) - xp / (xp * xp + z * z);
        integral += mode.psi[i] * kernel;
    }
    integral *= pot.dz;
    return consts::mu_0 * mat.m_sat() / (2.0 * std::numbers::pi) * integral;
}

DecoherenceModel calibrate(const RegisterDesign& design,
                           const PotentialProfile& pot,
                           const std::vector<ModeSolution>& modes,
                           const std::vector<SpinWaveLine>& lines,
                           const Anchor& anchor) {
    design.validate();
    if (modes.empty() || lines.empty()) {
        throw std::invalid_argument(
            "calibration needs solved modes and an assembled line registry");
    }
    DecoherenceModel model;
    model.de_fmr = design.mat.de_fmr;
    model.x_ref = anchor.x;
    model.g_ref = 1.0;  // placeholder during the reference search
    for (const ModeSolution& m : modes) {
        const double g =
            mode_coupling(design.geom, design.mat, pot, m, anchor.x);
        if (g != 0.0) {
            model.g_ref = g;
            break;
        }
    }
    const double unit_sum =
        rate_sum(model, design, pot, modes, lines, anchor.x, nullptr);
    const double unit_rate =
        thermal_factor(design.nu, anchor.temp) * unit_sum;
    if (!(unit_rate > 0.0) || !std::isfinite(unit_rate)) {
        throw std::runtime_error(
            "no mode couples at the calibration anchor; gamma0 is "
            "unconstrained");
    }
    if (!(anchor.t1 > 0.0)) {
        throw std::invalid_argument("anchor T1 must be positive");
    }
    model.gamma0 = 1.0 / (anchor.t1 * unit_rate);
    return model;
}

double t1_rate(const DecoherenceModel& model, const RegisterDesign& design,
               const PotentialProfile& pot,
               const std::vector<ModeSolution>& modes,
               const std::vector<SpinWaveLine>& lines, double x,
               double temp) {
    const double sum = rate_sum(model, design, pot, modes, lines, x, nullptr);
    return model.gamma0 * thermal_factor(design.nu, temp) * sum;
}

double t2_rate(const DecoherenceModel& model, const RegisterDesign& design,
               const PotentialProfile& pot,
               const std::vector<ModeSolution>& modes,
               const std::vector<SpinWaveLine>& lines, double x,
               double temp) {
    return (0.5 + model.alpha_phi) *
           t1_rate(model, design, pot, modes, lines, x, temp);
}

DecoherenceResult decoherence_at(const DecoherenceModel& model,
                                 const RegisterDesign& design,
                                 const PotentialProfile& pot,
                                 const std::vector<ModeSolution>& modes,
                                 const std::vector<SpinWaveLine>& lines,
                                 double x, double temp) {
    DecoherenceResult out;
    const double scale = model.gamma0 * thermal_factor(design.nu, temp);
    const double sum =
        rate_sum(model, design, pot, modes, lines, x, &out.per_mode);
    for (RateContribution& c : out.per_mode) c.rate *= scale;
    const double gamma1 = scale * sum;
    const double gamma2 = (0.5 + model.alpha_phi) * gamma1;
    out.t1 = gamma1 > 0.0 ? 1.0 / gamma1
                          : std::numeric_limits<double>::infinity();
    out.t2 = gamma2 > 0.0 ? 1.0 / gamma2
                          : std::numeric_limits<double>::infinity();
    return out;
}

std::vector<SweepRow> sweep_x(const DecoherenceModel& model,
                              const RegisterDesign& design,
                              const PotentialProfile& pot,
                              const std::vector<ModeSolution>& modes,
                              const std::vector<SpinWaveLine>& lines,
                              const std::vector<double>& xs,
                              const std::vector<double>& temps) {
    std::vector<SweepRow> rows;
    rows.reserve(xs.size() * temps.size());
    for (const double temp : temps) {
        for (const double x : xs) {
            const DecoherenceResult r =
                decoherence_at(model, design, pot, modes, lines, x, temp);
            rows.push_back({x, temp, r.t1, r.t2});
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_temp(const DecoherenceModel& model,
                                 const RegisterDesign& design,
                                 const PotentialProfile& pot,
                                 const std::vector<ModeSolution>& modes,
                                 const std::vector<SpinWaveLine>& lines,
                                 double x, const std::vector<double>& temps) {
    std::vector<SweepRow> rows;
    rows.reserve(temps.size());
    for (const double temp : temps) {
        const DecoherenceResult r =
            decoherence_at(model, design, pot, modes, lines, x, temp);
        rows.push_back({x, temp, r.t1, r.t2});
    }
    return rows;
}

}  // namespace stripefield
