#pragma once

#include <numbers>

namespace stripefield {

/**
 * Fixed CODATA physical constants, SI units. Values are compile-time
 * constants so every module shares the exact same numbers.
 */
namespace consts {
inline constexpr double h = 6.62607015e-34;    ///< Planck constant [J s]
inline constexpr double mu_b = 9.2740100783e-24;  ///< Bohr magneton [J/T]
inline constexpr double mu_0 = 4.0 * std::numbers::pi * 1e-7;  ///< vacuum permeability [T m/A]
inline constexpr double k_b = 1.380649e-23;    ///< Boltzmann constant [J/K]
inline constexpr double ev = 1.602176634e-19;  ///< electron volt [J]
}  // namespace consts

/// Gauss -> tesla, exact factor 1e-4.
constexpr double gauss_to_tesla(double gauss) { return gauss * 1e-4; }

/// Tesla -> gauss, exact factor 1e4.
constexpr double tesla_to_gauss(double tesla) { return tesla * 1e4; }

/**
 * Resonance field of a spin with g-factor `g` driven at frequency `nu` [Hz]:
 * the field B where h*nu = g*mu_B*B.
 *
 * @throws std::invalid_argument when nu or g is not strictly positive.
 */
double field_from_frequency(double nu, double g);

}  // namespace stripefield
