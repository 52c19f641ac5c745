#pragma once

#include <string>

#include "stripefield/config.hpp"

namespace stripefield {

/**
 * CLI command implementations. Each writes its dataset files into `out_dir`
 * (created if missing) and returns the process exit code: 0 on success,
 * 2 when a design check fails. Hard errors propagate as exceptions and are
 * mapped to exit code 1 by the CLI driver.
 *
 * All emitted CSV numbers use fixed scientific notation with 9 significant
 * digits, so identical configurations produce byte-identical files.
 */

/// fieldmap.csv, profile_bz_x.csv, gradient_x.csv, c_of_x.csv, xoptim.json.
int cmd_fieldmap(const RunConfig& cfg, const std::string& out_dir);

/// potential.csv, modes.csv (with the finite-difference cross-check columns),
/// profiles.csv (z and z* = z + 450 nm columns).
int cmd_modes(const RunConfig& cfg, const std::string& out_dir);

/// spectrum.csv and lines.json (spin-wave, qubit, and reference lines).
int cmd_spectrum(const RunConfig& cfg, const std::string& out_dir);

/// report.json: per-qubit resonance/clearance/Ising figures and the global
/// verdict. Returns 2 when the design fails.
int cmd_design_check(const RunConfig& cfg, const std::string& out_dir);

/// t_vs_x.csv (position sweep per temperature) and t_vs_T.csv (temperature
/// sweep at the anchor position).
int cmd_decoherence(const RunConfig& cfg, const std::string& out_dir);

}  // namespace stripefield
