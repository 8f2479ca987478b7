#include "casimir/orbits.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace casimir::orbits {

namespace {

void require_stationary(Sector sector, const char* who) {
    if (!is_stationary(sector)) {
        throw NoStationaryPoint(std::string(who) + ": sector (" + std::to_string(sector.n) + "," +
                                std::to_string(sector.w) + ") has no stationary point");
    }
}

double winding_angle(Sector sector) {
    return sector.w * std::numbers::pi / sector.n;
}

}  // namespace

std::string_view to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? "D" : "N";
}

bool is_stationary(Sector sector) {
    return sector.w >= 1 && sector.n >= 2 * sector.w;
}

bool is_diameter(Sector sector) {
    return sector.w >= 1 && sector.n == 2 * sector.w;
}

double stationary_z(Sector sector) {
    require_stationary(sector, "stationary_z");
    if (is_diameter(sector)) {
        return 0.0;
    }
    return std::cos(winding_angle(sector));
}

double orbit_length(Sector sector) {
    require_stationary(sector, "orbit_length");
    if (is_diameter(sector)) {
        return 4.0 * sector.w;
    }
    return 2.0 * sector.n * std::sin(winding_angle(sector));
}

int maslov_index(Sector sector, BoundaryCondition bc) {
    // Second-order caustic crossed n times (phase pi each) plus a pi lag per
    // Dirichlet reflection; only the parity mod 4 of the total matters.
    return bc == BoundaryCondition::Dirichlet ? 0 : 2 * sector.n;
}

double action_curvature(Sector sector) {
    if (sector.w == 0) {
        throw NoStationaryPoint("action_curvature: curvature diverges for w = 0");
    }
    require_stationary(sector, "action_curvature");
    if (is_diameter(sector)) {
        return static_cast<double>(sector.n);
    }
    return sector.n / std::sin(winding_angle(sector));
}

bool em_sector_filter(Sector sector) {
    return sector.n % 2 == 0;
}

OrbitGeometry describe(Sector sector) {
    return OrbitGeometry{
        .sector = sector,
        .stationary_z = stationary_z(sector),
        .length_over_r = orbit_length(sector),
        .maslov_dirichlet = maslov_index(sector, BoundaryCondition::Dirichlet),
        .maslov_neumann = maslov_index(sector, BoundaryCondition::Neumann),
        .curvature = action_curvature(sector),
        .diameter = is_diameter(sector),
        .em_contributes = em_sector_filter(sector),
    };
}

std::vector<Sector> enumerate_sectors(int n_max, bool em_only) {
    if (n_max < 2) {
        throw std::invalid_argument("enumerate_sectors: n_max must be >= 2");
    }
    std::vector<Sector> out;
    for (int n = 2; n <= n_max; ++n) {
        if (em_only && !em_sector_filter({n, 1})) {
            continue;
        }
        for (int w = 1; 2 * w <= n; ++w) {
            out.push_back({n, w});
        }
    }
    return out;
}

}  // namespace casimir::orbits
