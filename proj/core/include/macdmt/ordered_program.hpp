// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace macdmt::detail {

struct OrderedOptimum {
    double value = 0.0;
    std::vector<double> levels;  // ascending feasible point attaining value
};

inline constexpr std::size_t kDefaultOracleStateCap = 120'000'000;

/// Exact supremum of  sum_i clamp(rho - 1 + x_i, 0, rho)  over
///   0 <= x_1 <= ... <= x_n,   sum_i w_i x_i <= budget,   w_i > 0 integer.
///
/// The objective is piecewise linear with per-coordinate kinks at (1-rho)^+
/// and 1; every vertex of the kink-refined feasible polytope consists of
/// value blocks drawn from {0, (1-rho)^+, t, 1} with at most one block t not
/// pinned to a kink (pinned instead by budget tightness). All such patterns
/// are enumerated.
OrderedOptimum clamp_sum_sup(const std::vector<int>& weights, double budget, double rho);

/// Exact infimum of  sum_i w_i x_i  over
///   0 <= x_1 <= ... <= x_n <= 1,   sum_i (1 - x_i) <= slack,   w_i > 0.
/// Same block-vertex enumeration, with the single free block solved from
/// tightness of the slack constraint.
OrderedOptimum ordered_linear_inf(const std::vector<double>& weights, double slack);

/// Grid-exhaustive counterpart of clamp_sum_sup: the best point of the
/// ascending lattice {0, step, 2 step, ...}^n (levels above 1 are never
/// useful and are clipped) subject to the exact budget constraint. Evaluated
/// by dynamic programming over integer budget units, which scans exactly the
/// set direct point enumeration would. Throws std::runtime_error when the DP
/// table would exceed state_cap cells.
OrderedOptimum clamp_sum_sup_grid(const std::vector<int>& weights, double budget, double rho,
                                  double step, bool want_argmax = true,
                                  std::size_t state_cap = kDefaultOracleStateCap);

/// Grid-exhaustive counterpart of ordered_linear_inf.
OrderedOptimum ordered_linear_inf_grid(const std::vector<double>& weights, double slack,
                                       double step, bool want_argmax = true,
                                       std::size_t state_cap = kDefaultOracleStateCap);

}  // namespace macdmt::detail
