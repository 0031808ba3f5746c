// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "macdmt/piecewise_linear.hpp"

namespace macdmt {

/// Problem instance for the symmetric multiple access channel: K single-antenna
/// users, n_r receive antennas, coherence block of T channel uses, and per-user
/// multiplexing gain r in [0, n_r/K].
struct MacConfig {
    int num_users = 1;        // K
    int num_rx_antennas = 1;  // n_r
    int block_length = 1;     // T (1 for all uncoded-QAM paths)
    double mux_gain = 0.0;    // r, per user

    int nu() const;                 // min(K, n_r)
    double max_mux_gain() const;    // n_r / K
    void validate() const;          // throws std::domain_error / invalid_argument
};

/// Optimal diversity-multiplexing tradeoff of an (m x n) MIMO link: the
/// piecewise-linear curve through the integer points (k, (m-k)(n-k)),
/// k = 0..min(m,n).
PiecewiseLinearCurve mimo_dmt_curve(int m, int n);
double mimo_dmt(int m, int n, double r);

/// Optimal K-user MAC DMT at per-user multiplexing gain r:
///   n_r (1 - r)          for r <= n_r/(K+1)   (lightly loaded)
///   d*_{K,n_r}(K r)      for larger r         (heavily loaded, antenna pooling)
/// clamped at 0 (relevant only when n_r > K, where the curve is n_r(1-r)^+).
/// The two branches are checked to agree at the boundary on every curve build.
PiecewiseLinearCurve mac_dmt_curve(int K, int n_r);
double mac_dmt(int K, int n_r, double r);
double mac_dmt(const MacConfig& cfg);

}  // namespace macdmt
