#include "stripefield/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "stripefield/decoherence.hpp"
#include "stripefield/homogeneity.hpp"
#include "stripefield/lines.hpp"
#include "stripefield/registry.hpp"

namespace stripefield {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Fixed scientific notation, 9 significant digits: the same value always
/// renders to the same bytes, independent of stream state.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

/// Binary-mode output stream ('\n' line ends on every platform).
std::ofstream open_out(const std::filesystem::path& dir,
                       const std::string& name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + (dir / name).string());
    }
    return out;
}

std::filesystem::path prepare_dir(const std::string& out_dir) {
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_json(const std::filesystem::path& dir, const std::string& name,
                const ordered_json& j) {
    std::ofstream out = open_out(dir, name);
    out << j.dump(2) << '\n';
}

/// Shared spectroscopy context: modes at zero applied field and the line
/// registry they generate.
struct LineContext {
    PotentialProfile pot;
    std::vector<ModeSolution> modes;
    std::vector<SpinWaveLine> lines;
};

LineContext make_lines(const RunConfig& cfg) {
    LineContext ctx;
    ctx.pot = build_potential(cfg.geom, cfg.mat, 0.0, cfg.n_grid);
    ModeSet set = tm_eigensolve(ctx.pot, cfg.n_z_lines, cfg.bc);
    ctx.modes = std::move(set.modes);
    ctx.lines =
        assemble_lines(ctx.modes, cfg.geom, cfg.mat, cfg.nu, cfg.n_x_max);
    return ctx;
}

std::vector<ResonanceLine> spinwave_resonances(const RunConfig& cfg,
                                               const LineContext& ctx) {
    std::vector<ResonanceLine> out;
    out.reserve(ctx.lines.size());
    for (const SpinWaveLine& l : ctx.lines) {
        out.push_back(
            {l.b_res, LineKind::spin_wave, cfg.sw_linewidth_G, 1.0});
    }
    return out;
}

}  // namespace

int cmd_fieldmap(const RunConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    const std::filesystem::path dir = prepare_dir(out_dir);

    {
        std::ofstream out = open_out(dir, "fieldmap.csv");
        out << "x_nm,z_nm,bz_G,bx_G\n";
        for (const double x : cfg.fieldmap_x.points()) {
            for (const double z : cfg.fieldmap_z.points()) {
                try {
                    const double bz = stray_bz(cfg.geom, cfg.mat, x, z);
                    const double bx = stray_bx(cfg.geom, cfg.mat, x, z);
                    out << fmt(x * 1e9) << ',' << fmt(z * 1e9) << ','
                        << fmt(tesla_to_gauss(bz)) << ','
                        << fmt(tesla_to_gauss(bx)) << '\n';
                } catch (const std::domain_error&) {
                    // grid node inside the charged-face guard band: no value
                }
            }
        }
    }
    {
        std::ofstream profile = open_out(dir, "profile_bz_x.csv");
        std::ofstream gradient = open_out(dir, "gradient_x.csv");
        profile << "x_nm,bz_G,bz_T\n";
        gradient << "x_nm,dbz_dx_G_per_nm\n";
        for (const double x : cfg.profile_x.points()) {
            const double bz = stray_bz(cfg.geom, cfg.mat, x, 0.0);
            profile << fmt(x * 1e9) << ',' << fmt(tesla_to_gauss(bz)) << ','
                    << fmt(bz) << '\n';
            gradient << fmt(x * 1e9) << ','
                     << fmt(stray_bz_gradient_x(cfg.geom, cfg.mat, x, 0.0) *
                            1e-5)
                     << '\n';
        }
    }
    {
        std::ofstream out = open_out(dir, "c_of_x.csv");
        out << "x_nm,c_Tm\n";
        for (const double x : cfg.profile_x.points()) {
            if (std::abs(x) <= cfg.geom.t_x / 2) continue;
            out << fmt(x * 1e9) << ','
                << fmt(homogeneity_c(cfg.geom, cfg.mat, x).c_value) << '\n';
        }
    }

    const double x_opt = find_x_optim(cfg.geom, cfg.mat);
    ordered_json j;
    j["x_optim_nm"] = x_opt * 1e9;
    j["c_value_Tm"] = homogeneity_c(cfg.geom, cfg.mat, x_opt).c_value;
    j["bz_G"] = tesla_to_gauss(stray_bz(cfg.geom, cfg.mat, x_opt, 0.0));
    j["dbz_dx_G_per_nm"] =
        stray_bz_gradient_x(cfg.geom, cfg.mat, x_opt, 0.0) * 1e-5;
    write_json(dir, "xoptim.json", j);
    return 0;
}

int cmd_modes(const RunConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    const std::filesystem::path dir = prepare_dir(out_dir);

    const PotentialProfile pot =
        build_potential(cfg.geom, cfg.mat, 0.0, cfg.n_grid);
    const ModeSet tm = tm_eigensolve(pot, cfg.n_modes, cfg.bc);
    const ModeSet fd = fd_eigensolve(pot, cfg.n_modes, cfg.bc);

    {
        std::ofstream out = open_out(dir, "potential.csv");
        out << "z_nm,v_G,v_T\n";
        for (std::size_t i = 0; i < pot.z.size(); ++i) {
            out << fmt(pot.z[i] * 1e9) << ','
                << fmt(tesla_to_gauss(pot.v[i])) << ',' << fmt(pot.v[i])
                << '\n';
        }
    }
    {
        std::ofstream out = open_out(dir, "modes.csv");
        out << "n_z,b_n_G,b_n_T,b_n_fd_G,rel_diff,edge_weight,parity\n";
        const std::size_t k = std::min(tm.modes.size(), fd.modes.size());
        for (std::size_t i = 0; i < k; ++i) {
            const ModeSolution& a = tm.modes[i];
            const ModeSolution& b = fd.modes[i];
            out << a.n_z << ',' << fmt(tesla_to_gauss(a.b_n)) << ','
                << fmt(a.b_n) << ',' << fmt(tesla_to_gauss(b.b_n)) << ','
                << fmt(std::abs(a.b_n - b.b_n) / std::abs(a.b_n)) << ','
                << fmt(a.edge_weight) << ',' << a.parity << '\n';
        }
    }
    {
        // z* offsets the depth axis so the far stripe edge sits at one
        // half-thickness: z* = z + w_z/2 + t_x/2 (450 nm for the default
        // stripe).
        std::ofstream out = open_out(dir, "profiles.csv");
        out << "z_nm,zstar_nm";
        for (const ModeSolution& m : tm.modes) {
            out << ",psi_" << m.n_z;
        }
        out << '\n';
        const double shift = cfg.geom.w_z / 2 + cfg.geom.t_x / 2;
        for (std::size_t i = 0; i < pot.z.size(); ++i) {
            out << fmt(pot.z[i] * 1e9) << ',' << fmt((pot.z[i] + shift) * 1e9);
            for (const ModeSolution& m : tm.modes) {
                out << ',' << fmt(m.psi[i]);
            }
            out << '\n';
        }
    }
    return 0;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    const std::filesystem::path dir = prepare_dir(out_dir);

    const LineContext ctx = make_lines(cfg);
    const RegisterDesign design = cfg.design();

    std::vector<ResonanceLine> all = spinwave_resonances(cfg, ctx);
    ordered_json lines_json;
    lines_json["spin_wave"] = ordered_json::array();
    for (const SpinWaveLine& l : ctx.lines) {
        lines_json["spin_wave"].push_back({{"n_z", l.n_z},
                                           {"n_x", l.n_x},
                                           {"b_res_T", l.b_res},
                                           {"edge_weight", l.edge_weight}});
    }
    lines_json["qubit"] = ordered_json::array();
    for (const double x : cfg.positions) {
        const ResonanceLine q = qubit_line(design, x);
        all.push_back(q);
        lines_json["qubit"].push_back(
            {{"x_nm", x * 1e9}, {"b_res_T", q.b_res}});
    }
    lines_json["reference"] = ordered_json::array();
    if (cfg.include_reference_qubits) {
        const ResonanceLine far{field_from_frequency(cfg.nu, cfg.qubit.g_q),
                                LineKind::qubit, cfg.qubit.linewidth_G, 1.0};
        const ResonanceLine near = qubit_line(design, 500e-9);
        all.push_back(far);
        all.push_back(near);
        lines_json["reference"].push_back(
            {{"label", "far"}, {"b_res_T", far.b_res}});
        lines_json["reference"].push_back(
            {{"label", "x500nm"}, {"b_res_T", near.b_res}});
    }
    try {
        const GapReport gap = highest_gap(ctx.lines);
        lines_json["window"] = {{"b_high_T", gap.b_high},
                                {"b_second_T", gap.b_second},
                                {"gap_G", tesla_to_gauss(gap.gap)}};
    } catch (const std::invalid_argument&) {
        // fewer than two distinct spin-wave lines: no window to report
    }
    write_json(dir, "lines.json", lines_json);

    std::vector<double> grid;
    grid.reserve(cfg.b_sweep_points);
    const double db = (cfg.b_sweep_max - cfg.b_sweep_min) /
                      (cfg.b_sweep_points - 1);
    for (int i = 0; i < cfg.b_sweep_points; ++i) {
        grid.push_back(cfg.b_sweep_min + i * db);
    }
    const std::vector<double> signal = full_spectrum(all, grid);
    std::ofstream out = open_out(dir, "spectrum.csv");
    out << "b_T,b_G,signal\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << fmt(grid[i]) << ',' << fmt(tesla_to_gauss(grid[i])) << ','
            << fmt(signal[i]) << '\n';
    }
    return 0;
}

int cmd_design_check(const RunConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    const std::filesystem::path dir = prepare_dir(out_dir);

    const LineContext ctx = make_lines(cfg);
    const RegisterDesign design = cfg.design();
    const std::vector<ResonanceLine> sw = spinwave_resonances(cfg, ctx);

    std::vector<ResonanceLine> qubits;
    qubits.reserve(cfg.positions.size());
    for (const double x : cfg.positions) {
        qubits.push_back(qubit_line(design, x));
    }
    const OverlapReport overlap = overlap_check(qubits, sw, cfg.margin_G);

    bool pass = overlap.pass;
    ordered_json j;
    j["margin_G"] = cfg.margin_G;
    j["ising_min"] = cfg.ising_min;
    j["qubits"] = ordered_json::array();
    for (std::size_t i = 0; i < cfg.positions.size(); ++i) {
        const double x = cfg.positions[i];
        const double ratio = ising_ratio(design, x);
        const bool ising_pass = ratio >= cfg.ising_min;
        pass = pass && ising_pass;
        j["qubits"].push_back({{"x_nm", x * 1e9},
                               {"b_res_T", overlap.qubits[i].b_res},
                               {"clearance_G", overlap.qubits[i].clearance_G},
                               {"overlap_pass", overlap.qubits[i].pass},
                               {"ising_ratio", ratio},
                               {"ising_pass", ising_pass}});
    }
    try {
        const GapReport gap = highest_gap(ctx.lines);
        const double window_G = tesla_to_gauss(gap.gap);
        j["window_G"] = window_G;
        j["addressable_in_window"] = addressable_count(
            window_G, cfg.qubit.linewidth_G, cfg.packing);
    } catch (const std::invalid_argument&) {
        j["window_G"] = nullptr;
    }
    j["pass"] = pass;
    write_json(dir, "report.json", j);
    return pass ? 0 : 2;
}

int cmd_decoherence(const RunConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    const std::filesystem::path dir = prepare_dir(out_dir);

    const LineContext ctx = make_lines(cfg);
    const RegisterDesign design = cfg.design();
    const DecoherenceModel model =
        calibrate(design, ctx.pot, ctx.modes, ctx.lines, cfg.anchor);

    {
        std::ofstream out = open_out(dir, "t_vs_x.csv");
        out << "x_nm,T_K,t1_s,t2_s\n";
        for (const SweepRow& row :
             sweep_x(model, design, ctx.pot, ctx.modes, ctx.lines,
                     cfg.x_sweep.points(), cfg.temps)) {
            out << fmt(row.x * 1e9) << ',' << fmt(row.temp) << ','
                << fmt(row.t1) << ',' << fmt(row.t2) << '\n';
        }
    }
    {
        std::ofstream out = open_out(dir, "t_vs_T.csv");
        out << "x_nm,T_K,t1_s,t2_s\n";
        for (const SweepRow& row :
             sweep_temp(model, design, ctx.pot, ctx.modes, ctx.lines,
                        cfg.anchor.x, cfg.temp_sweep)) {
            out << fmt(row.x * 1e9) << ',' << fmt(row.temp) << ','
                << fmt(row.t1) << ',' << fmt(row.t2) << '\n';
        }
    }
    return 0;
}

}  // namespace stripefield
