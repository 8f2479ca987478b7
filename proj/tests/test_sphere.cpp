#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/oracles.hpp"
#include "casimir/sphere.hpp"

using namespace casimir;
using namespace casimir::sphere;

namespace {
constexpr double kPi = std::numbers::pi;

// Generic term straight from the double sum, in long double.
long double generic_term_reference(int n) {
    const long double pi = std::numbers::pi_v<long double>;
    long double inner = 0.0L;
    for (int w = 1; w < n; ++w) {
        const long double a = w * pi / (2.0L * n);
        inner += std::cos(a) / (std::sin(a) * std::sin(a));
    }
    const long double n4 = static_cast<long double>(n) * n * n * n;
    return 15.0L * std::numbers::sqrt2_v<long double> / (256.0L * n4) * inner;
}
}  // namespace

TEST_CASE("diameter terms") {
    CHECK(sphere_diameter_term(1) == doctest::Approx(1.0 / (16.0 * kPi)).epsilon(1e-15));
    CHECK(sphere_diameter_term(3) == doctest::Approx(1.0 / (16.0 * kPi * 81.0)).epsilon(1e-15));
    CHECK(sphere_diameter_sum() == doctest::Approx(std::pow(kPi, 4) / 90.0 / (16.0 * kPi)).epsilon(1e-15));
    CHECK(std::abs(sphere_diameter_sum() - 0.0215321) < 1e-7);
    CHECK_THROWS_AS(sphere_diameter_term(0), std::domain_error);
}

TEST_CASE("generic terms against long-double reference") {
    CHECK(sphere_generic_term(1) == 0.0);
    CHECK(std::abs(sphere_generic_term(2) - 0.00732421875) < 1e-15);
    CHECK(std::abs(sphere_generic_term(3) - 0.0042258308) < 1e-10);
    for (int n : {2, 5, 17, 100, 1000}) {
        const double ref = static_cast<double>(generic_term_reference(n));
        CHECK(sphere_generic_term(n) == doctest::Approx(ref).epsilon(1e-14));
    }
}

TEST_CASE("generic terms decay like (5 sqrt2 / 128) / n^2") {
    const double n = 10000.0;
    CHECK(std::abs(n * n * sphere_generic_term(10000) - 5.0 * std::numbers::sqrt2 / 128.0) < 1e-3);
}

TEST_CASE("headline value") {
    const auto e = sphere_sce();
    CHECK(std::abs(e.total - 0.04668) < 5e-5);
    CHECK(e.total == doctest::Approx(e.diameter_sum + e.generic_sum).epsilon(1e-15));
    CHECK(e.tail_error <= 1e-5);
    CHECK(e.explicit_terms_used == 50);
    CHECK(e.explicit_generic_sum < e.generic_sum);
    CHECK(std::abs(e.total / kFieldTheoryReference - 1.011) < 0.002);
}

TEST_CASE("tail estimates are mutually consistent") {
    const int counts[] = {30, 40, 50, 60};
    std::vector<SphereEnergyBreakdown> runs;
    for (int n : counts) {
        runs.push_back(sphere_sce({n, 4, 1e-5}));
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            CHECK(std::abs(runs[i].total - runs[j].total) <= runs[i].tail_error + runs[j].tail_error);
        }
    }
}

TEST_CASE("brute-force oracle agrees with the explicit sum") {
    for (int n_max : {2, 9, 64, 513, 1500}) {
        long double direct = 0.0L;
        for (int n = 2; n <= n_max; ++n) {
            direct += generic_term_reference(n);
        }
        CHECK(oracles::brute_force_sphere_generic_sum(n_max) ==
              doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));
    }
}

TEST_CASE("brute force plus leading tail approaches the extrapolated sum") {
    const int n_max = 20000;
    const double tail = 5.0 * std::numbers::sqrt2 / 128.0 / (n_max + 0.5);
    const double brute = oracles::brute_force_sphere_generic_sum(n_max) + tail;
    CHECK(std::abs(brute - sphere_sce().generic_sum) < 1e-6);
}

TEST_CASE("tolerance enforcement") {
    CHECK_THROWS_AS(sphere_sce({6, 1, 1e-12}), ToleranceNotMet);
    CHECK_THROWS_AS(sphere_sce({3, 3, 1e-5}), std::invalid_argument);
}

TEST_CASE("term rows") {
    const auto rows = sphere_term_rows(4);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].generic_term == 0.0);
    CHECK(rows[3].diameter_term == sphere_diameter_term(4));
    CHECK(rows[3].generic_term == sphere_generic_term(4));
}
