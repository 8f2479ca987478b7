#pragma once

#include <optional>
#include <vector>

#include "casimir/orbits.hpp"

namespace casimir::wkb {

using orbits::BoundaryCondition;

/// One semiclassical cavity mode of the disk: partial wave ell, radial index n,
/// and the dimensionless wave number x = kappa R.
struct WkbMode {
    int ell;
    int n;
    BoundaryCondition bc;
    double x;
};

/// f_ell(x) = sqrt(x^2 - ell^2) - ell arccos(ell / x), defined for x >= ell.
double f_ell(int ell, double x);

/// Quantisation target pi (n + 1/2 + 1/4) for Dirichlet, pi (n + 1/2 - 1/4) for Neumann.
double quantisation_phase(int n, BoundaryCondition bc);

/// Unique x > ell solving f_ell(x) = quantisation_phase(n, bc).
double wkb_zero(int ell, int n, BoundaryCondition bc);

WkbMode wkb_mode(int ell, int n, BoundaryCondition bc);

struct SpectrumRow {
    int ell;
    int n;
    BoundaryCondition bc;
    double x_wkb;
    double x_exact;
    /// |x_wkb - x_exact| / x_exact; empty when x_exact = 0.
    std::optional<double> rel_error;
    /// Set for (ell = 0, n = 0, Neumann): the exact zero of J'_0 at x = 0.
    bool anomaly;
};

/// WKB zeros against exact Bessel zeros for ell <= ell_max, n <= n_max,
/// ordered by (ell, n). Dirichlet compares with zeros of J_ell, Neumann
/// with zeros of J'_ell; radial index n maps to the (n+1)-th exact zero.
std::vector<SpectrumRow> spectrum_report(int ell_max, int n_max, BoundaryCondition bc);

}  // namespace casimir::wkb
