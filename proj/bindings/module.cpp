#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stripefield/commands.hpp"
#include "stripefield/constants.hpp"
#include "stripefield/decoherence.hpp"
#include "stripefield/eigensolve.hpp"
#include "stripefield/homogeneity.hpp"
#include "stripefield/lines.hpp"
#include "stripefield/potential.hpp"
#include "stripefield/registry.hpp"
#include "stripefield/stray_field.hpp"

namespace py = pybind11;
using namespace stripefield;

PYBIND11_MODULE(_stripefield, m) {
    m.doc() =
        "Stray-field design toolkit for spin qubits beside a ferromagnetic "
        "nanostripe: closed-form magnetostatics, confined spin-wave spectra, "
        "field-sweep resonance registries, addressability checks, and a "
        "calibrated magnon-decoherence model.";

    // --- constants and unit helpers -------------------------------------
    py::module_ consts_mod = m.def_submodule("consts", "CODATA constants, SI");
    consts_mod.attr("h") = consts::h;
    consts_mod.attr("mu_b") = consts::mu_b;
    consts_mod.attr("mu_0") = consts::mu_0;
    consts_mod.attr("k_b") = consts::k_b;
    consts_mod.attr("ev") = consts::ev;

    m.def("gauss_to_tesla", &gauss_to_tesla, py::arg("gauss"));
    m.def("tesla_to_gauss", &tesla_to_gauss, py::arg("tesla"));
    m.def("field_from_frequency", &field_from_frequency, py::arg("nu"),
          py::arg("g"), "Resonance field [T] where h*nu = g*mu_B*B.");

    // --- geometry and materials -----------------------------------------
    py::class_<StripeGeometry>(m, "StripeGeometry")
        .def(py::init([](double t_x, double w_z, double l_y) {
                 StripeGeometry g{t_x, w_z, l_y};
                 g.validate();
                 return g;
             }),
             py::arg("t_x"), py::arg("w_z"), py::arg("l_y"))
        .def_readwrite("t_x", &StripeGeometry::t_x)
        .def_readwrite("w_z", &StripeGeometry::w_z)
        .def_readwrite("l_y", &StripeGeometry::l_y)
        .def("validate", &StripeGeometry::validate)
        .def("__repr__", [](const StripeGeometry& g) {
            return "StripeGeometry(t_x=" + std::to_string(g.t_x) +
                   ", w_z=" + std::to_string(g.w_z) +
                   ", l_y=" + std::to_string(g.l_y) + ")";
        });

    py::class_<MaterialParams>(m, "MaterialParams")
        .def(py::init([](double b_sat, double a_exch, double g_fm,
                         double de_fmr, bool approximate) {
                 MaterialParams p{b_sat, a_exch, g_fm, de_fmr, approximate};
                 p.validate();
                 return p;
             }),
             py::arg("b_sat"), py::arg("a_exch"), py::arg("g_fm"),
             py::arg("de_fmr"), py::arg("approximate") = false)
        .def_readwrite("b_sat", &MaterialParams::b_sat)
        .def_readwrite("a_exch", &MaterialParams::a_exch)
        .def_readwrite("g_fm", &MaterialParams::g_fm)
        .def_readwrite("de_fmr", &MaterialParams::de_fmr)
        .def_readwrite("approximate", &MaterialParams::approximate)
        .def("m_sat", &MaterialParams::m_sat)
        .def("d_ex", &MaterialParams::d_ex)
        .def("validate", &MaterialParams::validate);

    py::class_<QubitSpec>(m, "QubitSpec")
        .def(py::init([](double g_q, double linewidth_G) {
                 QubitSpec q{g_q, linewidth_G};
                 q.validate();
                 return q;
             }),
             py::arg("g_q") = 2.0, py::arg("linewidth_G") = 1.0)
        .def_readwrite("g_q", &QubitSpec::g_q)
        .def_readwrite("linewidth_G", &QubitSpec::linewidth_G);

    m.def("material_preset", &material_preset, py::arg("name"),
          "Built-in presets: 'permalloy', 'dysprosium'.");

    // --- stray field ------------------------------------------------------
    m.def("stray_bz", &stray_bz, py::arg("geom"), py::arg("mat"),
          py::arg("x"), py::arg("z"),
          "B_z(x, z) on the y = 0 plane [T], closed form.");
    m.def("stray_bx", &stray_bx, py::arg("geom"), py::arg("mat"),
          py::arg("x"), py::arg("z"));
    m.def("stray_bz_gradient_x", &stray_bz_gradient_x, py::arg("geom"),
          py::arg("mat"), py::arg("x"), py::arg("z"),
          "Analytic dB_z/dx [T/m].");
    m.def("oracle_bz_3d", &oracle_bz_3d, py::arg("geom"), py::arg("mat"),
          py::arg("x"), py::arg("y"), py::arg("z"), py::arg("n_quad") = 64,
          "Finite-length surface-integration oracle for B_z [T].");
    m.def("oracle_bx_3d", &oracle_bx_3d, py::arg("geom"), py::arg("mat"),
          py::arg("x"), py::arg("y"), py::arg("z"), py::arg("n_quad") = 64);

    // --- homogeneity -------------------------------------------------------
    py::class_<HomogeneityResult>(m, "HomogeneityResult")
        .def_readonly("x", &HomogeneityResult::x)
        .def_readonly("c_value", &HomogeneityResult::c_value);
    m.def("homogeneity_c", &homogeneity_c, py::arg("geom"), py::arg("mat"),
          py::arg("x"), py::arg("z_half") = 100e-9,
          "C(x) = integral of B_z(x,z) - B_z(x,0) over |z| <= z_half [T m].");
    m.def("find_x_optim", &find_x_optim, py::arg("geom"), py::arg("mat"),
          "Zero crossing of C(x) outside the stripe [m].");

    // --- confined modes ----------------------------------------------------
    py::class_<PotentialProfile>(m, "PotentialProfile")
        .def_readonly("z", &PotentialProfile::z)
        .def_readonly("v", &PotentialProfile::v)
        .def_readonly("dz", &PotentialProfile::dz)
        .def_readonly("d_ex", &PotentialProfile::d_ex)
        .def_readonly("b0", &PotentialProfile::b0)
        .def_readonly("w_z", &PotentialProfile::w_z);
    m.def("build_potential", &build_potential, py::arg("geom"),
          py::arg("mat"), py::arg("b0"), py::arg("n_grid"),
          "1D confining potential v(z) = b0 + B_z(0, z) on a midpoint grid.");

    py::enum_<Boundary>(m, "Boundary")
        .value("dirichlet", Boundary::dirichlet)
        .value("neumann", Boundary::neumann);

    py::class_<ModeSolution>(m, "ModeSolution")
        .def_readonly("n_z", &ModeSolution::n_z)
        .def_readonly("b_n", &ModeSolution::b_n)
        .def_readonly("psi", &ModeSolution::psi)
        .def_readonly("edge_weight", &ModeSolution::edge_weight)
        .def_readonly("parity", &ModeSolution::parity);
    py::class_<ModeSet>(m, "ModeSet")
        .def_readonly("modes", &ModeSet::modes)
        .def_readonly("complete", &ModeSet::complete);
    m.def("tm_eigensolve", &tm_eigensolve, py::arg("pot"), py::arg("n_max"),
          py::arg("bc") = Boundary::dirichlet,
          "Transfer-matrix eigensolver (parity-split, exact per-cell).");
    m.def("fd_eigensolve", &fd_eigensolve, py::arg("pot"), py::arg("n_max"),
          py::arg("bc") = Boundary::dirichlet,
          "Finite-difference cross-check eigensolver.");
    m.def("edge_weight_of", &edge_weight_of, py::arg("pot"), py::arg("psi"),
          py::arg("band") = 50e-9);
    m.def("fd_count_below", &fd_count_below, py::arg("pot"), py::arg("b"),
          py::arg("bc") = Boundary::dirichlet);

    // --- resonance lines ----------------------------------------------------
    py::class_<SpinWaveLine>(m, "SpinWaveLine")
        .def_readonly("n_z", &SpinWaveLine::n_z)
        .def_readonly("n_x", &SpinWaveLine::n_x)
        .def_readonly("b_total", &SpinWaveLine::b_total)
        .def_readonly("b_res", &SpinWaveLine::b_res)
        .def_readonly("edge_weight", &SpinWaveLine::edge_weight);
    m.def("assemble_lines", &assemble_lines, py::arg("modes"),
          py::arg("geom"), py::arg("mat"), py::arg("nu"), py::arg("n_x_max"),
          "Field-sweep resonance lines of every (n_z, n_x) combination.");
    py::class_<GapReport>(m, "GapReport")
        .def_readonly("b_high", &GapReport::b_high)
        .def_readonly("b_second", &GapReport::b_second)
        .def_readonly("gap", &GapReport::gap);
    m.def("highest_gap", &highest_gap, py::arg("lines"),
          "Two highest distinct lines and their separation.");

    // --- register -----------------------------------------------------------
    py::class_<RegisterDesign>(m, "RegisterDesign")
        .def(py::init([](StripeGeometry geom, MaterialParams mat,
                         QubitSpec qubit, double nu,
                         std::vector<double> positions, double l_inter) {
                 RegisterDesign d{geom, mat, qubit, nu, std::move(positions),
                                  l_inter};
                 d.validate();
                 return d;
             }),
             py::arg("geom"), py::arg("mat"), py::arg("qubit"), py::arg("nu"),
             py::arg("positions"), py::arg("l_inter"))
        .def_readwrite("geom", &RegisterDesign::geom)
        .def_readwrite("mat", &RegisterDesign::mat)
        .def_readwrite("qubit", &RegisterDesign::qubit)
        .def_readwrite("nu", &RegisterDesign::nu)
        .def_readwrite("positions", &RegisterDesign::positions)
        .def_readwrite("l_inter", &RegisterDesign::l_inter);

    py::enum_<LineKind>(m, "LineKind")
        .value("spin_wave", LineKind::spin_wave)
        .value("qubit", LineKind::qubit);
    py::class_<ResonanceLine>(m, "ResonanceLine")
        .def(py::init([](double b_res, LineKind kind, double width_G,
                         double amplitude) {
                 return ResonanceLine{b_res, kind, width_G, amplitude};
             }),
             py::arg("b_res"), py::arg("kind"), py::arg("width_G"),
             py::arg("amplitude") = 1.0)
        .def_readonly("b_res", &ResonanceLine::b_res)
        .def_readonly("kind", &ResonanceLine::kind)
        .def_readonly("width_G", &ResonanceLine::width_G)
        .def_readonly("amplitude", &ResonanceLine::amplitude);

    m.def("qubit_line", &qubit_line, py::arg("design"), py::arg("x"),
          "Qubit resonance line at position x.");
    m.def("ising_ratio", &ising_ratio, py::arg("design"), py::arg("x"),
          "Gradient detuning of neighbors over their dipolar coupling.");
    py::class_<OverlapEntry>(m, "OverlapEntry")
        .def_readonly("b_res", &OverlapEntry::b_res)
        .def_readonly("clearance_G", &OverlapEntry::clearance_G)
        .def_readonly("pass_", &OverlapEntry::pass);
    py::class_<OverlapReport>(m, "OverlapReport")
        .def_readonly("qubits", &OverlapReport::qubits)
        .def_readonly("pass_", &OverlapReport::pass);
    m.def("overlap_check", &overlap_check, py::arg("qubit_lines"),
          py::arg("spinwave_lines"), py::arg("margin_G"));
    m.def("addressable_count", &addressable_count, py::arg("interval_G"),
          py::arg("linewidth_G"), py::arg("packing") = 2.0);
    m.def("full_spectrum", &full_spectrum, py::arg("lines"),
          py::arg("b_grid"), "Sum of Lorentzians over a field grid.");

    // --- decoherence ----------------------------------------------------------
    py::class_<DecoherenceModel>(m, "DecoherenceModel")
        .def(py::init<>())
        .def_readwrite("gamma0", &DecoherenceModel::gamma0)
        .def_readwrite("alpha_phi", &DecoherenceModel::alpha_phi)
        .def_readwrite("de_fmr", &DecoherenceModel::de_fmr)
        .def_readwrite("g_ref", &DecoherenceModel::g_ref)
        .def_readwrite("x_ref", &DecoherenceModel::x_ref);
    py::class_<RateContribution>(m, "RateContribution")
        .def_readonly("n_z", &RateContribution::n_z)
        .def_readonly("n_x", &RateContribution::n_x)
        .def_readonly("rate", &RateContribution::rate);
    py::class_<DecoherenceResult>(m, "DecoherenceResult")
        .def_readonly("t1", &DecoherenceResult::t1)
        .def_readonly("t2", &DecoherenceResult::t2)
        .def_readonly("per_mode", &DecoherenceResult::per_mode);
    py::class_<Anchor>(m, "Anchor")
        .def(py::init([](double x, double temp, double t1) {
                 return Anchor{x, temp, t1};
             }),
             py::arg("x"), py::arg("temp"), py::arg("t1"))
        .def_readwrite("x", &Anchor::x)
        .def_readwrite("temp", &Anchor::temp)
        .def_readwrite("t1", &Anchor::t1);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("x", &SweepRow::x)
        .def_readonly("temp", &SweepRow::temp)
        .def_readonly("t1", &SweepRow::t1)
        .def_readonly("t2", &SweepRow::t2);

    m.def("mode_coupling", &mode_coupling, py::arg("geom"), py::arg("mat"),
          py::arg("pot"), py::arg("mode"), py::arg("x"),
          "Transverse stray field per unit mode excitation at (x, 0) [T].");
    m.def("calibrate", &calibrate, py::arg("design"), py::arg("pot"),
          py::arg("modes"), py::arg("lines"), py::arg("anchor"),
          "Fix gamma0 so the anchor (x, T, T1) is reproduced exactly.");
    m.def("t1_rate", &t1_rate, py::arg("model"), py::arg("design"),
          py::arg("pot"), py::arg("modes"), py::arg("lines"), py::arg("x"),
          py::arg("temp"));
    m.def("t2_rate", &t2_rate, py::arg("model"), py::arg("design"),
          py::arg("pot"), py::arg("modes"), py::arg("lines"), py::arg("x"),
          py::arg("temp"));
    m.def("decoherence_at", &decoherence_at, py::arg("model"),
          py::arg("design"), py::arg("pot"), py::arg("modes"),
          py::arg("lines"), py::arg("x"), py::arg("temp"));
    m.def("sweep_x", &sweep_x, py::arg("model"), py::arg("design"),
          py::arg("pot"), py::arg("modes"), py::arg("lines"), py::arg("xs"),
          py::arg("temps"));
    m.def("sweep_temp", &sweep_temp, py::arg("model"), py::arg("design"),
          py::arg("pot"), py::arg("modes"), py::arg("lines"), py::arg("x"),
          py::arg("temps"));

    // --- configuration and commands -------------------------------------------
    py::class_<LinearGrid>(m, "LinearGrid")
        .def(py::init([](double min, double max, double step) {
                 return LinearGrid{min, max, step};
             }),
             py::arg("min"), py::arg("max"), py::arg("step"))
        .def_readwrite("min", &LinearGrid::min)
        .def_readwrite("max", &LinearGrid::max)
        .def_readwrite("step", &LinearGrid::step)
        .def("points", &LinearGrid::points);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("geom", &RunConfig::geom)
        .def_readwrite("preset", &RunConfig::preset)
        .def_readwrite("mat", &RunConfig::mat)
        .def_readwrite("qubit", &RunConfig::qubit)
        .def_readwrite("nu", &RunConfig::nu)
        .def_readwrite("bc", &RunConfig::bc)
        .def_readwrite("positions", &RunConfig::positions)
        .def_readwrite("l_inter", &RunConfig::l_inter)
        .def_readwrite("n_grid", &RunConfig::n_grid)
        .def_readwrite("n_modes", &RunConfig::n_modes)
        .def_readwrite("n_z_lines", &RunConfig::n_z_lines)
        .def_readwrite("n_x_max", &RunConfig::n_x_max)
        .def_readwrite("sw_linewidth_G", &RunConfig::sw_linewidth_G)
        .def_readwrite("include_reference_qubits",
                       &RunConfig::include_reference_qubits)
        .def_readwrite("margin_G", &RunConfig::margin_G)
        .def_readwrite("packing", &RunConfig::packing)
        .def_readwrite("ising_min", &RunConfig::ising_min)
        .def_readwrite("fieldmap_x", &RunConfig::fieldmap_x)
        .def_readwrite("fieldmap_z", &RunConfig::fieldmap_z)
        .def_readwrite("profile_x", &RunConfig::profile_x)
        .def_readwrite("b_sweep_min", &RunConfig::b_sweep_min)
        .def_readwrite("b_sweep_max", &RunConfig::b_sweep_max)
        .def_readwrite("b_sweep_points", &RunConfig::b_sweep_points)
        .def_readwrite("x_sweep", &RunConfig::x_sweep)
        .def_readwrite("temps", &RunConfig::temps)
        .def_readwrite("temp_sweep", &RunConfig::temp_sweep)
        .def_readwrite("anchor", &RunConfig::anchor)
        .def("design", &RunConfig::design)
        .def("validate", &RunConfig::validate);
    m.def("load_config", &load_config, py::arg("path"),
          "Parse a strict JSON configuration on top of the defaults.");

    m.def("cmd_fieldmap", &cmd_fieldmap, py::arg("cfg"), py::arg("out_dir"));
    m.def("cmd_modes", &cmd_modes, py::arg("cfg"), py::arg("out_dir"));
    m.def("cmd_spectrum", &cmd_spectrum, py::arg("cfg"), py::arg("out_dir"));
    m.def("cmd_design_check", &cmd_design_check, py::arg("cfg"),
          py::arg("out_dir"));
    m.def("cmd_decoherence", &cmd_decoherence, py::arg("cfg"),
          py::arg("out_dir"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
