#include "stripefield/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace stripefield {

namespace {

using nlohmann::json;

/// Strict-mode guard: every key of `obj` must be in `allowed`.
void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        throw std::invalid_argument(where + " must be a JSON object");
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown key '" + key + "' in " +
                                        where);
        }
    }
}

double num(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw std::invalid_argument(path + " must be a number");
    }
    return j.get<double>();
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        throw std::invalid_argument(path + " must be an integer");
    }
    return j.get<int>();
}

bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) {
        throw std::invalid_argument(path + " must be a boolean");
    }
    return j.get<bool>();
}

std::string text(const json& j, const std::string& path) {
    if (!j.is_string()) {
        throw std::invalid_argument(path + " must be a string");
    }
    return j.get<std::string>();
}

std::vector<double> num_array(const json& j, const std::string& path,
                              double unit) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument(path + " must be a non-empty array");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(num(v, path + "[]") * unit);
    return out;
}

/// {min, max, step} object, values scaled by `unit` into SI.
LinearGrid grid(const json& j, const std::string& path, double unit) {
    check_keys(j, path, {"min", "max", "step"});
    LinearGrid g{};
    if (!j.contains("min") || !j.contains("max") || !j.contains("step")) {
        throw std::invalid_argument(path + " needs min, max and step");
    }
    g.min = num(j.at("min"), path + ".min") * unit;
    g.max = num(j.at("max"), path + ".max") * unit;
    g.step = num(j.at("step"), path + ".step") * unit;
    return g;
}

void apply_geometry(RunConfig& cfg, const json& j) {
    check_keys(j, "geometry", {"t_x_nm", "w_z_nm", "l_y_um"});
    if (j.contains("t_x_nm")) {
        cfg.geom.t_x = num(j.at("t_x_nm"), "geometry.t_x_nm") * 1e-9;
    }
    if (j.contains("w_z_nm")) {
        cfg.geom.w_z = num(j.at("w_z_nm"), "geometry.w_z_nm") * 1e-9;
    }
    if (j.contains("l_y_um")) {
        cfg.geom.l_y = num(j.at("l_y_um"), "geometry.l_y_um") * 1e-6;
    }
}

void apply_material(RunConfig& cfg, const json& j) {
    check_keys(j, "material",
               {"preset", "b_sat_T", "a_exch_J_per_m", "g_fm", "de_fmr_ueV"});
    if (j.contains("preset")) {
        cfg.preset = text(j.at("preset"), "material.preset");
        cfg.mat = material_preset(cfg.preset);
    }
    if (j.contains("b_sat_T")) {
        cfg.mat.b_sat = num(j.at("b_sat_T"), "material.b_sat_T");
    }
    if (j.contains("a_exch_J_per_m")) {
        cfg.mat.a_exch = num(j.at("a_exch_J_per_m"), "material.a_exch_J_per_m");
    }
    if (j.contains("g_fm")) {
        cfg.mat.g_fm = num(j.at("g_fm"), "material.g_fm");
    }
    if (j.contains("de_fmr_ueV")) {
        cfg.mat.de_fmr =
            num(j.at("de_fmr_ueV"), "material.de_fmr_ueV") * 1e-6 * consts::ev;
    }
}

void apply_register(RunConfig& cfg, const json& j) {
    check_keys(j, "register",
               {"qubit_positions_nm", "qubit_array", "l_inter_nm"});
    if (j.contains("qubit_positions_nm") && j.contains("qubit_array")) {
        throw std::invalid_argument(
            "register accepts qubit_positions_nm or qubit_array, not both");
    }
    if (j.contains("qubit_positions_nm")) {
        cfg.positions = num_array(j.at("qubit_positions_nm"),
                                  "register.qubit_positions_nm", 1e-9);
    }
    if (j.contains("qubit_array")) {
        const json& a = j.at("qubit_array");
        check_keys(a, "register.qubit_array",
                   {"start_nm", "count", "spacing_nm"});
        if (!a.contains("start_nm") || !a.contains("count") ||
            !a.contains("spacing_nm")) {
            throw std::invalid_argument(
                "register.qubit_array needs start_nm, count and spacing_nm");
        }
        const double start =
            num(a.at("start_nm"), "register.qubit_array.start_nm") * 1e-9;
        const int count = integer(a.at("count"), "register.qubit_array.count");
        const double spacing =
            num(a.at("spacing_nm"), "register.qubit_array.spacing_nm") * 1e-9;
        if (count < 1) {
            throw std::invalid_argument(
                "register.qubit_array.count must be >= 1");
        }
        cfg.positions.clear();
        for (int i = 0; i < count; ++i) {
            cfg.positions.push_back(start + i * spacing);
        }
    }
    if (j.contains("l_inter_nm")) {
        cfg.l_inter = num(j.at("l_inter_nm"), "register.l_inter_nm") * 1e-9;
    }
}

void apply_solver(RunConfig& cfg, const json& j) {
    check_keys(j, "solver", {"n_grid", "n_modes", "n_z_lines", "n_x_max"});
    if (j.contains("n_grid")) {
        cfg.n_grid = integer(j.at("n_grid"), "solver.n_grid");
    }
    if (j.contains("n_modes")) {
        cfg.n_modes = integer(j.at("n_modes"), "solver.n_modes");
    }
    if (j.contains("n_z_lines")) {
        cfg.n_z_lines = integer(j.at("n_z_lines"), "solver.n_z_lines");
    }
    if (j.contains("n_x_max")) {
        cfg.n_x_max = integer(j.at("n_x_max"), "solver.n_x_max");
    }
}

void apply_spectrum(RunConfig& cfg, const json& j) {
    check_keys(j, "spectrum",
               {"sw_linewidth_G", "include_reference_qubits", "b_min_T",
                "b_max_T", "points"});
    if (j.contains("sw_linewidth_G")) {
        cfg.sw_linewidth_G =
            num(j.at("sw_linewidth_G"), "spectrum.sw_linewidth_G");
    }
    if (j.contains("include_reference_qubits")) {
        cfg.include_reference_qubits = boolean(
            j.at("include_reference_qubits"),
            "spectrum.include_reference_qubits");
    }
    if (j.contains("b_min_T")) {
        cfg.b_sweep_min = num(j.at("b_min_T"), "spectrum.b_min_T");
    }
    if (j.contains("b_max_T")) {
        cfg.b_sweep_max = num(j.at("b_max_T"), "spectrum.b_max_T");
    }
    if (j.contains("points")) {
        cfg.b_sweep_points = integer(j.at("points"), "spectrum.points");
    }
}

void apply_design_check(RunConfig& cfg, const json& j) {
    check_keys(j, "design_check", {"margin_G", "packing", "ising_min"});
    if (j.contains("margin_G")) {
        cfg.margin_G = num(j.at("margin_G"), "design_check.margin_G");
    }
    if (j.contains("packing")) {
        cfg.packing = num(j.at("packing"), "design_check.packing");
    }
    if (j.contains("ising_min")) {
        cfg.ising_min = num(j.at("ising_min"), "design_check.ising_min");
    }
}

void apply_fieldmap(RunConfig& cfg, const json& j) {
    check_keys(j, "fieldmap", {"x_nm", "z_nm", "profile_x_nm"});
    if (j.contains("x_nm")) {
        cfg.fieldmap_x = grid(j.at("x_nm"), "fieldmap.x_nm", 1e-9);
    }
    if (j.contains("z_nm")) {
        cfg.fieldmap_z = grid(j.at("z_nm"), "fieldmap.z_nm", 1e-9);
    }
    if (j.contains("profile_x_nm")) {
        cfg.profile_x = grid(j.at("profile_x_nm"), "fieldmap.profile_x_nm",
                             1e-9);
    }
}

void apply_decoherence(RunConfig& cfg, const json& j) {
    check_keys(j, "decoherence",
               {"x_sweep_nm", "temps_K", "temp_sweep_K", "anchor"});
    if (j.contains("x_sweep_nm")) {
        cfg.x_sweep = grid(j.at("x_sweep_nm"), "decoherence.x_sweep_nm", 1e-9);
    }
    if (j.contains("temps_K")) {
        cfg.temps = num_array(j.at("temps_K"), "decoherence.temps_K", 1.0);
    }
    if (j.contains("temp_sweep_K")) {
        cfg.temp_sweep =
            num_array(j.at("temp_sweep_K"), "decoherence.temp_sweep_K", 1.0);
    }
    if (j.contains("anchor")) {
        const json& a = j.at("anchor");
        check_keys(a, "decoherence.anchor", {"x_nm", "temp_K", "t1_s"});
        if (a.contains("x_nm")) {
            cfg.anchor.x = num(a.at("x_nm"), "decoherence.anchor.x_nm") * 1e-9;
        }
        if (a.contains("temp_K")) {
            cfg.anchor.temp = num(a.at("temp_K"), "decoherence.anchor.temp_K");
        }
        if (a.contains("t1_s")) {
            cfg.anchor.t1 = num(a.at("t1_s"), "decoherence.anchor.t1_s");
        }
    }
}

}  // namespace

std::vector<double> LinearGrid::points() const {
    if (!(step > 0.0) || !(max >= min)) {
        throw std::invalid_argument("grid needs step > 0 and max >= min");
    }
    const int n = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(min + i * step);
    return out;
}

RunConfig::RunConfig() {
    positions.reserve(16);
    for (int i = 0; i < 16; ++i) positions.push_back(199e-9 + i * 5e-9);
}

RegisterDesign RunConfig::design() const {
    return {geom, mat, qubit, nu, positions, l_inter};
}

void RunConfig::validate() const {
    design().validate();  // geometry, material, qubit, positions, spacing
    if (bc != Boundary::dirichlet && bc != Boundary::neumann) {
        throw std::invalid_argument("unknown boundary condition");
    }
    if (n_grid < 801) {
        throw std::invalid_argument("solver.n_grid must be >= 801");
    }
    if (n_modes < 1) {
        throw std::invalid_argument("solver.n_modes must be >= 1");
    }
    if (n_z_lines < 1 || n_z_lines > n_modes) {
        throw std::invalid_argument(
            "solver.n_z_lines must be in [1, n_modes]");
    }
    if (n_x_max < 1) {
        throw std::invalid_argument("solver.n_x_max must be >= 1");
    }
    if (!(sw_linewidth_G > 0.0)) {
        throw std::invalid_argument("spectrum.sw_linewidth_G must be > 0");
    }
    if (!(margin_G >= 0.0) || !(packing > 0.0) || !(ising_min >= 0.0)) {
        throw std::invalid_argument(
            "design_check needs margin_G >= 0, packing > 0, ising_min >= 0");
    }
    if (!(b_sweep_min > 0.0) || !(b_sweep_max > b_sweep_min) ||
        b_sweep_points < 2) {
        throw std::invalid_argument(
            "spectrum sweep needs 0 < b_min_T < b_max_T and points >= 2");
    }
    fieldmap_x.points();  // throws on malformed grids
    fieldmap_z.points();
    profile_x.points();
    x_sweep.points();
    if (temps.empty() || temp_sweep.empty()) {
        throw std::invalid_argument("temperature lists must be non-empty");
    }
    for (const double t : temps) {
        if (!(t > 0.0)) {
            throw std::invalid_argument("temperatures must be positive");
        }
    }
    for (const double t : temp_sweep) {
        if (!(t > 0.0)) {
            throw std::invalid_argument("temperatures must be positive");
        }
    }
    if (std::abs(anchor.x) <= geom.t_x / 2 || !(anchor.temp > 0.0) ||
        !(anchor.t1 > 0.0)) {
        throw std::invalid_argument(
            "anchor needs a position outside the stripe, positive "
            "temperature and positive T1");
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config parse error in " + path + ": " +
                                 e.what());
    }

    RunConfig cfg;
    check_keys(j, "config",
               {"geometry", "material", "qubit", "frequency_GHz", "boundary",
                "register", "solver", "spectrum", "design_check", "fieldmap",
                "decoherence"});
    if (j.contains("geometry")) apply_geometry(cfg, j.at("geometry"));
    if (j.contains("material")) apply_material(cfg, j.at("material"));
    if (j.contains("qubit")) {
        const json& q = j.at("qubit");
        check_keys(q, "qubit", {"g_q", "linewidth_G"});
        if (q.contains("g_q")) {
            cfg.qubit.g_q = num(q.at("g_q"), "qubit.g_q");
        }
        if (q.contains("linewidth_G")) {
            cfg.qubit.linewidth_G =
                num(q.at("linewidth_G"), "qubit.linewidth_G");
        }
    }
    if (j.contains("frequency_GHz")) {
        cfg.nu = num(j.at("frequency_GHz"), "frequency_GHz") * 1e9;
    }
    if (j.contains("boundary")) {
        const std::string b = text(j.at("boundary"), "boundary");
        if (b == "dirichlet") {
            cfg.bc = Boundary::dirichlet;
        } else if (b == "neumann") {
            cfg.bc = Boundary::neumann;
        } else {
            throw std::invalid_argument(
                "boundary must be 'dirichlet' or 'neumann'");
        }
    }
    if (j.contains("register")) apply_register(cfg, j.at("register"));
    if (j.contains("solver")) apply_solver(cfg, j.at("solver"));
    if (j.contains("spectrum")) apply_spectrum(cfg, j.at("spectrum"));
    if (j.contains("design_check")) {
        apply_design_check(cfg, j.at("design_check"));
    }
    if (j.contains("fieldmap")) apply_fieldmap(cfg, j.at("fieldmap"));
    if (j.contains("decoherence")) apply_decoherence(cfg, j.at("decoherence"));

    cfg.validate();
    return cfg;
}

}  // namespace stripefield
