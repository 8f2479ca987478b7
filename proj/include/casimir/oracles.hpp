#pragma once

namespace casimir::oracles {

/// Direct sum of the generic sphere terms for n = 2..n_max with no
/// extrapolation. The inner cot-csc sums advance cos/sin by rotation in
/// eight independent lanes, reseeded from libm every 512 steps.
double brute_force_sphere_generic_sum(int n_max);

}  // namespace casimir::oracles
