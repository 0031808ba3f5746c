// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "macdmt/dmt_curves.hpp"
#include "macdmt/exponent_solver.hpp"
#include "macdmt/piecewise_linear.hpp"

namespace macdmt {

/// Configuration of the feedback-aided user-selection bounds: L of K users
/// transmit, chosen from the allowable set {1..nu} plus K (no pruning).
/// r is the per-user average multiplexing gain; a selected user transmits at
/// K r / L.
struct SelectionBoundConfig {
    int num_users = 1;       // K
    int num_rx_antennas = 1; // n_r
    int selected_users = 1;  // L
    double mux_gain = 0.0;   // r

    int nu() const;
    double max_mux_gain() const;  // L/K for L <= nu, n_r/K for L = K
    void validate() const;
};

struct AscendingLevelVector {
    std::vector<double> levels;  // alpha_1 <= ... <= alpha_ell, all >= 0
};

/// Weights of the ascending singularity levels in the exponent of the
/// (k, ell) selection outage sub-event.
std::vector<double> outage_exponent_weights(int K, int n_r, int k, int ell);

/// D_{k,ell}(alpha): the exponent of the (k, ell) outage sub-event at levels
/// alpha.
double outage_exponent(const AscendingLevelVector& alpha, int K, int n_r, int k, int ell);

/// d_{k,ell}(r): infimum of the exponent over the near-outage region
/// { ascending alpha >= 0 : sum (1 - alpha_i)^+ <= r }. Zero for r >= ell.
double outage_dmt(int K, int n_r, int k, int ell, double r);
double outage_dmt_grid_oracle(int K, int n_r, int k, int ell, double r, double step);

/// Closed-form piecewise-linear representation of outage_dmt(K, n_r, 0, L, .):
/// the curve through (p, (K-p)(n_r-p)) for p = 0..P and (L, 0), with
/// P = argmin_p (K-p)(n_r-p)/(L-p).
PiecewiseLinearCurve outage_dmt_piecewise(int K, int n_r, int L);

/// Selection-aided DMT upper bound dbar_us,L(r); for L = K this is the
/// optimal MAC DMT (the bound is tight there).
double selection_dmt_bound(const SelectionBoundConfig& cfg);
double selection_dmt_bound(int K, int n_r, int L, double r);

/// Same bound, extended by 0 past the achievable multiplexing gain of the
/// selected configuration (used by sweeps and the L optimization).
double selection_dmt_bound_extended(int K, int n_r, int L, double r);

/// Complexity exponent bound sufficient for the selection-aided DMT bound
/// (L = K delegates to the no-selection bound). argmax_levels are ascending.
ExponentBound selection_complexity_bound(const SelectionBoundConfig& cfg);
ExponentBound selection_complexity_grid_oracle(const SelectionBoundConfig& cfg, double step,
                                               bool want_argmax = true,
                                               std::size_t cell_cap = detail::kDefaultOracleStateCap);

/// Complexity exponent bound when selection is calibrated to preserve the
/// full MAC DMT: the same sup with budget d*_mac(r) when
/// dbar_us,L(r) >= d*_mac(r), and the no-selection bound otherwise.
ExponentBound reduced_complexity_bound(const SelectionBoundConfig& cfg);
ExponentBound reduced_complexity_grid_oracle(const SelectionBoundConfig& cfg, double step,
                                             bool want_argmax = true,
                                             std::size_t cell_cap = detail::kDefaultOracleStateCap);
double reduced_complexity_bound_min(int K, int n_r, double r);

struct SelectionChoice {
    int selected_users = 1;
    double dmt_bound = 0.0;
};

/// argmax of the selection DMT bound over the allowed L set ({1..nu} plus K
/// when allow_all_users). Ties break toward smaller L.
SelectionChoice best_selection_size(int K, int n_r, double r, bool allow_all_users);

std::vector<int> allowed_selection_sizes(int K, int n_r);

/// ceil(log2 C(K, L)): feedback bits per coherence period to announce the
/// selection outcome.
int feedback_bits(int K, int L);

}  // namespace macdmt
