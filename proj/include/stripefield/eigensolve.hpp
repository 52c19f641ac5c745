#pragma once

#include <vector>

#include "stripefield/potential.hpp"

namespace stripefield {

/// Outer-wall boundary condition at z = +-w_z/2.
enum class Boundary { dirichlet, neumann };

/// One confined 1D spin-wave mode.
struct ModeSolution {
    int n_z;                  ///< 0-based index, ordered by eigenvalue
    double b_n;               ///< eigenvalue in field units [T]
    std::vector<double> psi;  ///< profile at the grid nodes, sum(psi^2)*dz = 1 [1/sqrt(m)]
    double edge_weight;       ///< fraction of sum(psi^2)*dz within 50 nm of either edge
    int parity;               ///< +1 even, -1 odd in z
};

/// Solver output; `complete` is false when fewer modes than requested exist
/// below the scan ceiling.
struct ModeSet {
    std::vector<ModeSolution> modes;
    bool complete = true;
};

/**
 * Transfer-matrix eigensolver for -d_ex*psi'' + v(z)*psi = b*psi.
 *
 * Each grid cell carries a constant potential; (psi, psi') propagates across
 * it with the exact 2x2 cell solution, trigonometric where b > v_j and
 * hyperbolic where b < v_j, kappa = sqrt(|v_j - b|/d_ex). The mirror-symmetric
 * potential is solved per parity on the half-domain z >= 0 — exact
 * parity-pure eigenfunctions, and the exponentially split doublets of the
 * double-well resolve as simple roots instead of invisible double roots.
 * Eigenvalues are located by sign changes of the outer-wall mismatch
 * (psi for Dirichlet, psi' for Neumann) over a scan of (range)/5000 steps,
 * refined by bisection to 1e-10 T, and verified against the Sturm
 * oscillation count.
 *
 * @throws std::runtime_error when the scan misses a root (Sturm count
 * mismatch) — a resolution failure rather than a silent wrong answer.
 */
ModeSet tm_eigensolve(const PotentialProfile& pot, int n_max,
                      Boundary bc = Boundary::dirichlet);

/**
 * Independent validation oracle: standard 3-point finite-difference
 * discretization of the same operator on the same grid, eigenvalues by
 * Sturm-count bisection on the tridiagonal matrix, eigenvectors by inverse
 * iteration. Same parity decomposition, ordering, and normalization
 * contracts as tm_eigensolve.
 */
ModeSet fd_eigensolve(const PotentialProfile& pot, int n_max,
                      Boundary bc = Boundary::dirichlet);

/// Fraction of sum(psi^2)*dz lying within `band` of either domain edge.
double edge_weight_of(const PotentialProfile& pot,
                      const std::vector<double>& psi, double band = 50e-9);

/**
 * Number of eigenvalues of the finite-difference operator strictly below
 * `b`, from the Sturm sequence (sign count of the LDL^T pivots). Used to
 * cross-check eigenvalue indices.
 */
int fd_count_below(const PotentialProfile& pot, double b,
                   Boundary bc = Boundary::dirichlet);

}  // namespace stripefield
