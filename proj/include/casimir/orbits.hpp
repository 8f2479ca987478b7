#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

namespace casimir::orbits {

/// Raised for sectors without a classical stationary point (w = 0 or n < 2w).
class NoStationaryPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Periodic-orbit class: n reflections off the shell, w windings about the center.
struct Sector {
    int n = 0;
    int w = 0;

    friend bool operator==(const Sector&, const Sector&) = default;
    friend auto operator<=>(const Sector&, const Sector&) = default;
};

enum class BoundaryCondition { Dirichlet, Neumann };

std::string_view to_string(BoundaryCondition bc);

inline constexpr BoundaryCondition kAllBoundaryConditions[] = {BoundaryCondition::Dirichlet,
                                                               BoundaryCondition::Neumann};

/// True iff n >= 2w >= 1.
bool is_stationary(Sector sector);

/// Diameter orbits (2w, w) pass through the center; their stationary point sits
/// on the endpoint z = 0 of the angular-momentum integral.
bool is_diameter(Sector sector);

/// Angular-momentum fraction cos(w pi / n) at the stationary point.
double stationary_z(Sector sector);

/// Orbit length 2 n sin(w pi / n) in units of R.
double orbit_length(Sector sector);

/// Keller-Maslov index in the sphere: 0 (Dirichlet) or 2n (Neumann).
int maslov_index(Sector sector, BoundaryCondition bc);

/// Second z-derivative of the phase at the stationary point, n / sin(w pi / n).
double action_curvature(Sector sector);

/// Dirichlet and Neumann contributions add for even n and cancel for odd n.
bool em_sector_filter(Sector sector);

struct OrbitGeometry {
    Sector sector;
    double stationary_z;
    double length_over_r;
    int maslov_dirichlet;
    int maslov_neumann;
    double curvature;
    bool diameter;
    bool em_contributes;
};

OrbitGeometry describe(Sector sector);

/// Stationary sectors with n <= n_max, ordered by (n, w).
std::vector<Sector> enumerate_sectors(int n_max, bool em_only);

}  // namespace casimir::orbits
