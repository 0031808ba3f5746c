// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "macdmt/dmt_curves.hpp"
#include "macdmt/ordered_program.hpp"

namespace macdmt {

/// Ordered channel singularity levels. Descending (mu_1 >= ... >= mu_nu >= 0)
/// for the no-selection bounds; the selection bounds use the ascending
/// convention and note it at the call site.
struct OrderedLevelVector {
    std::vector<double> levels;
};

enum class BoundMethod {
    kVertexEnumeration,
    kClosedForm,
    kGridOracle,
};

struct ExponentBound {
    double value = 0.0;
    OrderedLevelVector argmax_levels;
    BoundMethod method = BoundMethod::kVertexEnumeration;
};

/// Near-outage probability weights of the ordered singularity levels:
/// |K - n_r| + 2i - 1 for i = 1..min(K, n_r).
std::vector<int> singularity_weights(int K, int n_r);

/// Upper bound on the complexity exponent of ML-based sphere decoding that
/// suffices for DMT d_target (any d_target >= 0 is accepted; values above the
/// optimal MAC DMT extrapolate the same sup problem over a larger region).
ExponentBound complexity_bound_for_dmt(const MacConfig& cfg, double d_target);

/// Complexity exponent bound for achieving the optimal MAC DMT with uncoded
/// QAM (requires T = 1). Capped at the brute-force ceiling r*K*T.
ExponentBound complexity_bound(const MacConfig& cfg);

/// Closed form for n_r = 1: (K-1) r on 0 <= r <= 1/K.
double complexity_bound_single_rx(int K, double r);

/// Closed form for n_r = K:
/// r*floor(sqrt(K(1-r))) + (r - 1 + (K(1-r) - floor^2)/(2 floor + 1))^+.
double complexity_bound_equal_rx(int K, double r);

/// Limit form for n_r > K: min{ r, (K-1)(1-r)^+ / (n_r - K + 1) }.
double complexity_bound_many_rx(int K, int n_r, double r);

/// Exhaustive search over the ascending step-grid intersected with the
/// constraint region; independent verification oracle for the solvers above.
ExponentBound complexity_bound_grid_oracle(const MacConfig& cfg, double d_target, double step,
                                           bool want_argmax = true,
                                           std::size_t cell_cap = detail::kDefaultOracleStateCap);

}  // namespace macdmt
