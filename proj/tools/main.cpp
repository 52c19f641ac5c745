#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stripefield/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Stray-field design toolkit for spin qubits beside a "
                 "ferromagnetic nanostripe"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string config_path;
    std::string out_dir = ".";
    std::string preset;
    std::string bc;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_dir, "output directory")
        ->capture_default_str();
    app.add_option("--preset", preset, "material preset override")
        ->check(CLI::IsMember({"permalloy", "dysprosium"}));
    app.add_option("--bc", bc, "outer-wall boundary condition override")
        ->check(CLI::IsMember({"dirichlet", "neumann"}));

    CLI::App* fieldmap = app.add_subcommand(
        "fieldmap", "stray-field maps, gradient and homogeneity optimum");
    CLI::App* modes = app.add_subcommand(
        "modes", "confined spin-wave potential, eigenvalues and profiles");
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "field-sweep absorption spectrum and line registry");
    CLI::App* design_check = app.add_subcommand(
        "design-check", "overlap, addressability and Ising-regime report");
    CLI::App* decoherence = app.add_subcommand(
        "decoherence", "calibrated T1/T2 position and temperature sweeps");
    for (CLI::App* sub :
         {fieldmap, modes, spectrum, design_check, decoherence}) {
        sub->fallthrough(true);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        stripefield::RunConfig cfg;
        if (!config_path.empty()) {
            cfg = stripefield::load_config(config_path);
        }
        if (!preset.empty()) {
            cfg.preset = preset;
            cfg.mat = stripefield::material_preset(preset);
        }
        if (!bc.empty()) {
            cfg.bc = bc == "dirichlet" ? stripefield::Boundary::dirichlet
                                       : stripefield::Boundary::neumann;
        }
        if (app.got_subcommand(fieldmap)) {
            return stripefield::cmd_fieldmap(cfg, out_dir);
        }
        if (app.got_subcommand(modes)) {
            return stripefield::cmd_modes(cfg, out_dir);
        }
        if (app.got_subcommand(spectrum)) {
            return stripefield::cmd_spectrum(cfg, out_dir);
        }
        if (app.got_subcommand(design_check)) {
            return stripefield::cmd_design_check(cfg, out_dir);
        }
        return stripefield::cmd_decoherence(cfg, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
