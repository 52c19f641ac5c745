#pragma once

#include <string>
#include <vector>

#include "stripefield/decoherence.hpp"
#include "stripefield/eigensolve.hpp"

namespace stripefield {

/// Uniform grid over a closed interval, in the I/O units of the field.
struct LinearGrid {
    double min;
    double max;
    double step;

    std::vector<double> points() const;
};

/**
 * Full run configuration with the default values of every command. A JSON
 * configuration file overrides any subset; unknown keys are rejected
 * (strict mode) and all physical parameters are validated before any
 * computation starts. Lengths at this boundary are in nm (l_y in um),
 * frequencies in GHz, fields in gauss or tesla as suffixed.
 */
struct RunConfig {
    StripeGeometry geom{100e-9, 800e-9, 100e-6};
    std::string preset = "permalloy";
    MaterialParams mat = material_preset("permalloy");
    QubitSpec qubit{};
    double nu = 34e9;
    Boundary bc = Boundary::dirichlet;

    std::vector<double> positions;  ///< qubit x positions [m]
    double l_inter = 5e-9;

    int n_grid = 20000;   ///< potential cells (even; >= 801)
    int n_modes = 10;     ///< 1D modes emitted by `modes`
    int n_z_lines = 8;    ///< 1D modes entering the line registry
    int n_x_max = 4;      ///< across-width quantum numbers per 1D mode

    double sw_linewidth_G = 10.0;  ///< spin-wave display width in the spectrum
    bool include_reference_qubits = true;  ///< far/500 nm marker lines

    double margin_G = 10.0;     ///< overlap guard band
    double packing = 2.0;       ///< linewidths per addressable qubit
    double ising_min = 40.0;    ///< design-check threshold on ising_ratio

    LinearGrid fieldmap_x{-495e-9, 495e-9, 10e-9};
    LinearGrid fieldmap_z{-595e-9, 595e-9, 10e-9};
    LinearGrid profile_x{60e-9, 1000e-9, 1e-9};
    double b_sweep_min = 0.70;  ///< [T]
    double b_sweep_max = 1.60;  ///< [T]
    int b_sweep_points = 18001;

    LinearGrid x_sweep{150e-9, 325e-9, 25e-9};
    std::vector<double> temps{3.0, 30.0, 300.0};
    std::vector<double> temp_sweep{2, 3, 5, 10, 20, 30, 50, 100, 200, 300};
    Anchor anchor{230e-9, 2.0, 3.4};

    RunConfig();

    /// The register design described by this configuration.
    RegisterDesign design() const;

    /// @throws std::invalid_argument on any out-of-range parameter.
    void validate() const;
};

/**
 * Parse a JSON configuration file on top of the defaults. Strict: unknown
 * keys, malformed values, and out-of-range physics all throw before any
 * computation starts.
 *
 * @throws std::runtime_error on I/O or parse failure;
 * @throws std::invalid_argument on schema or range violations.
 */
RunConfig load_config(const std::string& path);

}  // namespace stripefield
