#pragma once

#include <stdexcept>
#include <vector>

#include "casimir/series.hpp"

namespace casimir::sphere {

/// Field-theoretic electromagnetic self-energy of the sphere, units hbar c / R.
/// Reference constant for comparison only.
inline constexpr double kFieldTheoryReference = 0.04617;

class ToleranceNotMet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Electromagnetic periodic-orbit energy of a metallic spherical shell,
/// coefficient of hbar c / R.
struct SphereEnergyBreakdown {
    double diameter_sum;
    double generic_sum;
    double total;
    double tail_error;
    int explicit_terms_used;
    /// Generic sum truncated at explicit_terms_used, before extrapolation.
    double explicit_generic_sum;
};

/// 1 / (16 pi n^4).
double sphere_diameter_term(int n);

/// Closed form of the diameter sum, zeta(4) / (16 pi) = pi^3 / 1440.
double sphere_diameter_sum();

/// (15 sqrt2 / (256 n^4)) sum_{w=1}^{n-1} cos(w pi / 2n) / sin^2(w pi / 2n).
/// Decays like (5 sqrt2 / 128) / n^2. Zero for n = 1.
double sphere_generic_term(int n);

/// Explicit generic terms for n = 1..plan.explicit_terms, Richardson tail on
/// the trailing partial sums. Throws ToleranceNotMet if the tail estimate
/// exceeds plan.tolerance.
SphereEnergyBreakdown sphere_sce(const series::SeriesTailPlan& plan = {});

struct SphereTermRow {
    int n;
    double diameter_term;
    double generic_term;
};

std::vector<SphereTermRow> sphere_term_rows(int n_max);

}  // namespace casimir::sphere
