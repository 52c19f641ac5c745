#include "stripefield/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stripefield {

namespace {

/// Half-domain view of the mirror-symmetric problem: cells offset..offset+m-1
/// of the full grid cover z in [0, w_z/2]. The parity fixes the z = 0
/// condition (even: psi'(0) = 0, odd: psi(0) = 0).
struct HalfProblem {
    const PotentialProfile* pot;
    int offset;
    int m;
    int parity;
    Boundary bc;
};

/// Exact propagation of (psi, psi') across one constant-potential cell of
/// width `len`: trigonometric above the potential, hyperbolic below it.
void cell_step(double v, double b, double d_ex, double len, double& psi,
               double& dpsi) {
    const double diff = b - v;
    const double p = psi;
    if (diff > 0) {
        const double k = std::sqrt(diff / d_ex);
        const double s = std::sin(k * len), c = std::cos(k * len);
        psi = p * c + dpsi / k * s;
        dpsi = -p * k * s + dpsi * c;
    } else if (diff < 0) {
        const double k = std::sqrt(-diff / d_ex);
        const double s = std::sinh(k * len), c = std::cosh(k * len);
        psi = p * c + dpsi / k * s;
        dpsi = p * k * s + dpsi * c;
    } else {
        psi += dpsi * len;
    }
}

struct Shot {
    double mismatch;  ///< wall residual: psi (Dirichlet) or psi' (Neumann)
    int nodes;        ///< sign changes of psi at interior cell boundaries
};

/// Propagate from z = 0 to the outer wall at energy b. When `midpoints` is
/// given it receives psi at the half-domain cell midpoints (the grid nodes).
Shot tm_shoot(const HalfProblem& hp, double b,
              std::vector<double>* midpoints) {
    const PotentialProfile& pot = *hp.pot;
    double psi = hp.parity > 0 ? 1.0 : 0.0;
    double dpsi = hp.parity > 0 ? 0.0 : 1.0;
    int nodes = 0;
    int last_sign = psi > 0 ? 1 : 0;
    if (midpoints) midpoints->assign(hp.m, 0.0);
    for (int j = 0; j < hp.m; ++j) {
        const double v = pot.v[hp.offset + j];
        if (midpoints) {
            double pm = psi, dm = dpsi;
            cell_step(v, b, pot.d_ex, pot.dz / 2, pm, dm);
            (*midpoints)[j] = pm;
        }
        cell_step(v, b, pot.d_ex, pot.dz, psi, dpsi);
        if (j < hp.m - 1) {  // interior boundary: track oscillation count
            const int s = psi > 0 ? 1 : (psi < 0 ? -1 : 0);
            if (s != 0) {
                if (last_sign != 0 && s != last_sign) ++nodes;
                last_sign = s;
            }
        }
        // Rescale long hyperbolic stretches before they overflow; only the
        // overall scale of the shot is lost, which nothing downstream uses.
        const double mag = std::max(std::abs(psi), std::abs(dpsi) * pot.w_z);
        if (mag > 1e100) {
            psi /= mag;
            dpsi /= mag;
            if (midpoints) {
                for (int q = 0; q <= j; ++q) (*midpoints)[q] /= mag;
            }
        }
    }
    return {hp.bc == Boundary::dirichlet ? psi : dpsi, nodes};
}

/// Bisect a bracketed mismatch sign change down to 1e-10 T.
double tm_bisect(const HalfProblem& hp, double lo, double hi, double m_lo) {
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double mm = tm_shoot(hp, mid, nullptr).mismatch;
        if (mm == 0.0) return mid;
        if ((mm > 0) == (m_lo > 0)) {
            lo = mid;
            m_lo = mm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Scan [lo, hi] in (hi-lo)/5000 steps for mismatch sign changes, refine
/// each bracket, and verify the harvest against the oscillation count: at an
/// energy between consecutive roots the shot must show exactly as many
/// interior nodes as there are roots below it, or the scan skipped a root.
std::vector<double> tm_roots(const HalfProblem& hp, double lo, double hi,
                             int want) {
    const int steps = 5000;
    const double db = (hi - lo) / steps;
    std::vector<double> roots;
    double prev_b = lo;
    double prev_m = tm_shoot(hp, lo, nullptr).mismatch;
    for (int i = 1; i <= steps && static_cast<int>(roots.size()) < want;
         ++i) {
        const double b = lo + i * db;
        const double m = tm_shoot(hp, b, nullptr).mismatch;
        if (m == 0.0) {
            roots.push_back(b);
        } else if (prev_m != 0.0 && (m > 0) != (prev_m > 0)) {
            roots.push_back(tm_bisect(hp, prev_b, b, prev_m));
        }
        prev_b = b;
        prev_m = m;
    }
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const double below = j == 0 ? lo : roots[j - 1];
        const double probe = 0.5 * (below + roots[j]);
        const int nodes = tm_shoot(hp, probe, nullptr).nodes;
        // The oscillation count at the probe equals the number of
        // *Dirichlet* eigenvalues below it. Between consecutive Dirichlet
        // roots that number is exactly j; between consecutive Neumann roots
        // interlacing allows j-1 or j.
        const int hi_ok = static_cast<int>(j);
        const int lo_ok = hp.bc == Boundary::dirichlet ? hi_ok : hi_ok - 1;
        if (nodes < lo_ok || nodes > hi_ok) {
            throw std::runtime_error(
                "transfer-matrix scan missed an eigenvalue near " +
                std::to_string(probe) +
                " T; refine the grid or widen the scan");
        }
    }
    return roots;
}

/// Mirror a half-domain profile onto the full grid, normalize to
/// sum(psi^2)*dz = 1, and fix the sign so the largest-|psi| node is
/// positive (first such node on ties).
ModeSolution finish_mode(const PotentialProfile& pot, double b, int parity,
                         const std::vector<double>& half) {
    const int n = static_cast<int>(pot.v.size());
    const int m = n / 2;
    ModeSolution ms;
    ms.n_z = -1;  // assigned after the parities are merged
    ms.b_n = b;
    ms.parity = parity;
    ms.psi.resize(n);
    for (int j = 0; j < m; ++j) {
        ms.psi[m + j] = half[j];
        ms.psi[m - 1 - j] = parity > 0 ? half[j] : -half[j];
    }
    double s2 = 0.0;
    for (const double p : ms.psi) s2 += p * p;
    const double norm = std::sqrt(s2 * pot.dz);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::runtime_error("eigenmode reconstruction degenerated");
    }
    std::size_t arg = 0;
    for (std::size_t i = 1; i < ms.psi.size(); ++i) {
        if (std::abs(ms.psi[i]) > std::abs(ms.psi[arg])) arg = i;
    }
    const double flip = ms.psi[arg] < 0 ? -1.0 : 1.0;
    for (double& p : ms.psi) p *= flip / norm;
    ms.edge_weight = edge_weight_of(pot, ms.psi);
    return ms;
}

void check_inputs(const PotentialProfile& pot, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("need n_max >= 1 modes");
    }
    if (pot.v.size() < 2 || pot.v.size() % 2 != 0 ||
        pot.v.size() != pot.z.size() || !(pot.dz > 0.0) ||
        !(pot.d_ex > 0.0)) {
        throw std::invalid_argument("malformed potential profile");
    }
}

/// Scan window shared by both solvers: from just below the potential floor
/// to a box-potential bound that leaves (n_max+2) half-waves of headroom, so
/// the ceiling stays above the requested modes even for a flat potential.
std::pair<double, double> scan_window(const PotentialProfile& pot,
                                      int n_max) {
    const auto [mn, mx] = std::minmax_element(pot.v.begin(), pot.v.end());
    const double kc = (n_max + 2) * std::numbers::pi / pot.w_z;
    return {*mn - 1e-6, *mx + pot.d_ex * kc * kc};
}

/// Merge per-parity eigenvalue lists, even first on exact ties (the deepest
/// doublets split below double precision), and assign global indices.
ModeSet merge_parities(std::vector<ModeSolution>&& even,
                       std::vector<ModeSolution>&& odd, int n_max) {
    ModeSet out;
    out.modes.reserve(even.size() + odd.size());
    std::size_t ie = 0, io = 0;
    while (ie < even.size() || io < odd.size()) {
        const bool take_even =
            io == odd.size() ||
            (ie < even.size() && even[ie].b_n <= odd[io].b_n);
        out.modes.push_back(take_even ? std::move(even[ie++])
                                      : std::move(odd[io++]));
    }
    if (static_cast<int>(out.modes.size()) > n_max) {
        out.modes.resize(n_max);
    }
    out.complete = static_cast<int>(out.modes.size()) == n_max;
    for (std::size_t i = 0; i < out.modes.size(); ++i) {
        out.modes[i].n_z = static_cast<int>(i);
    }
    return out;
}

// --- finite-difference oracle -------------------------------------------

/// Tridiagonal (A - 0) with constant off-diagonal, diag folded for the
/// parity ghost at z = 0 and the wall ghost at z = w_z/2 (half-offset grid).
struct Tridiag {
    std::vector<double> diag;
    double off;
};

Tridiag fd_matrix(const HalfProblem& hp) {
    const PotentialProfile& pot = *hp.pot;
    const double k = pot.d_ex / (pot.dz * pot.dz);
    Tridiag t;
    t.off = -k;
    t.diag.resize(hp.m);
    for (int j = 0; j < hp.m; ++j) t.diag[j] = pot.v[hp.offset + j] + 2 * k;
    t.diag[0] += hp.parity > 0 ? -k : +k;  // mirror ghost psi_{-1} = +-psi_0
    t.diag[hp.m - 1] += hp.bc == Boundary::dirichlet ? +k : -k;
    return t;
}

/// Eigenvalues of the tridiagonal below b, by the sign count of the LDL^T
/// pivots (Sturm sequence).
int sturm_count(const Tridiag& t, double b) {
    const double off2 = t.off * t.off;
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        d = t.diag[i] - b - (i > 0 ? off2 / d : 0.0);
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

/// k-th (0-based) eigenvalue by Sturm-count bisection to 1e-12 T.
double fd_eigenvalue(const Tridiag& t, int k) {
    const auto [mn, mx] = std::minmax_element(t.diag.begin(), t.diag.end());
    double lo = *mn - 2.0 * std::abs(t.off);
    double hi = *mx + 2.0 * std::abs(t.off);
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(t, mid) <= k) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Eigenvector by inverse iteration: Thomas solves of (A - lambda I)x = y.
/// The bisected lambda sits ~1e-12 T off the true eigenvalue, so each solve
/// amplifies the eigencomponent enormously; three passes are plenty.
std::vector<double> fd_eigenvector(const Tridiag& t, double lambda) {
    const int m = static_cast<int>(t.diag.size());
    std::vector<double> x(m, 1.0), cp(m), dp(m);
    for (int pass = 0; pass < 3; ++pass) {
        double denom = t.diag[0] - lambda;
        if (std::abs(denom) < 1e-280) denom = 1e-280;
        cp[0] = t.off / denom;
        dp[0] = x[0] / denom;
        for (int i = 1; i < m; ++i) {
            denom = t.diag[i] - lambda - t.off * cp[i - 1];
            if (std::abs(denom) < 1e-280) denom = 1e-280;
            cp[i] = t.off / denom;
            dp[i] = (x[i] - t.off * dp[i - 1]) / denom;
        }
        x[m - 1] = dp[m - 1];
        for (int i = m - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
        double peak = 0.0;
        for (const double xi : x) peak = std::max(peak, std::abs(xi));
        if (!(peak > 0.0) || !std::isfinite(peak)) {
            throw std::runtime_error("inverse iteration degenerated");
        }
        for (double& xi : x) xi /= peak;
    }
    return x;
}

std::vector<ModeSolution> solve_parity_tm(const PotentialProfile& pot,
                                          int parity, Boundary bc, int n_max,
                                          double lo, double hi) {
    const int n = static_cast<int>(pot.v.size());
    const HalfProblem hp{&pot, n / 2, n / 2, parity, bc};
    const std::vector<double> roots = tm_roots(hp, lo, hi, n_max);
    std::vector<ModeSolution> out;
    out.reserve(roots.size());
    std::vector<double> half;
    for (const double b : roots) {
        tm_shoot(hp, b, &half);
        out.push_back(finish_mode(pot, b, parity, half));
    }
    return out;
}

std::vector<ModeSolution> solve_parity_fd(const PotentialProfile& pot,
                                          int parity, Boundary bc, int n_max,
                                          double ceiling) {
    const int n = static_cast<int>(pot.v.size());
    const HalfProblem hp{&pot, n / 2, n / 2, parity, bc};
    const Tridiag t = fd_matrix(hp);
    const int avail = std::min(n_max, sturm_count(t, ceiling));
    std::vector<ModeSolution> out;
    out.reserve(avail);
    for (int k = 0; k < avail; ++k) {
        const double b = fd_eigenvalue(t, k);
        out.push_back(finish_mode(pot, b, parity, fd_eigenvector(t, b)));
    }
    return out;
}

}  // namespace

ModeSet tm_eigensolve(const PotentialProfile& pot, int n_max, Boundary bc) {
    check_inputs(pot, n_max);
    const auto [lo, hi] = scan_window(pot, n_max);
    return merge_parities(solve_parity_tm(pot, +1, bc, n_max, lo, hi),
                          solve_parity_tm(pot, -1, bc, n_max, lo, hi),
                          n_max);
}

ModeSet fd_eigensolve(const PotentialProfile& pot, int n_max, Boundary bc) {
    check_inputs(pot, n_max);
    const double ceiling = scan_window(pot, n_max).second;
    return merge_parities(solve_parity_fd(pot, +1, bc, n_max, ceiling),
                          solve_parity_fd(pot, -1, bc, n_max, ceiling),
                          n_max);
}

double edge_weight_of(const PotentialProfile& pot,
                      const std::vector<double>& psi, double band) {
    if (psi.size() != pot.z.size()) {
        throw std::invalid_argument("profile/grid size mismatch");
    }
    double total = 0.0, edge = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double w = psi[i] * psi[i];
        total += w;
        if (pot.z[i] <= -pot.w_z / 2 + band ||
            pot.z[i] >= pot.w_z / 2 - band) {
            edge += w;
        }
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("zero profile has no edge weight");
    }
    return edge / total;
}

int fd_count_below(const PotentialProfile& pot, double b, Boundary bc) {
    check_inputs(pot, 1);
    const int n = static_cast<int>(pot.v.size());
    int count = 0;
    for (const int parity : {+1, -1}) {
        const HalfProblem hp{&pot, n / 2, n / 2, parity, bc};
        count += sturm_count(fd_matrix(hp), b);
    }
    return count;
}

}  // namespace stripefield
