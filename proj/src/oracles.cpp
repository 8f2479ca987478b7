#include "casimir/oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace casimir::oracles {

double brute_force_sphere_generic_sum(int n_max) {
    constexpr int kLanes = 8;
    constexpr int kReseedBlocks = 64;
    const double prefactor = 15.0 * std::numbers::sqrt2 / 256.0;

    double total = 0.0;
    double carry = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        const double theta = std::numbers::pi / (2.0 * n);
        const double rot_c = std::cos(kLanes * theta);
        const double rot_s = std::sin(kLanes * theta);
        std::array<double, kLanes> c{};
        std::array<double, kLanes> s{};
        std::array<double, kLanes> acc{};
        int block = 0;
        for (int base = 1; base < n; base += kLanes, ++block) {
            if (block % kReseedBlocks == 0) {
                for (int j = 0; j < kLanes; ++j) {
                    c[j] = std::cos((base + j) * theta);
                    s[j] = std::sin((base + j) * theta);
                }
            }
            if (n - base >= kLanes) {
                for (int j = 0; j < kLanes; ++j) {
                    acc[j] += c[j] / (s[j] * s[j]);
                }
            } else {
                for (int j = 0; j < n - base; ++j) {
                    acc[j] += c[j] / (s[j] * s[j]);
                }
            }
            for (int j = 0; j < kLanes; ++j) {
                const double cj = c[j];
                c[j] = cj * rot_c - s[j] * rot_s;
                s[j] = s[j] * rot_c + cj * rot_s;
            }
        }
        double inner = 0.0;
        for (double a : acc) {
            inner += a;
        }
        const double nd = n;
        const double term = prefactor * inner / (nd * nd * nd * nd);
        const double t = total + term;
        carry += std::abs(total) >= std::abs(term) ? (total - t) + term : (term - t) + total;
        total = t;
    }
    return total + carry;
}

}  // namespace casimir::oracles
