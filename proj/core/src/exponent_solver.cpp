// SPDX-License-Identifier: Apache-2.0
#include "macdmt/exponent_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace macdmt {

namespace {

// The mu vector is descending while the generic solver works on ascending
// vectors; reversing both the coordinates and the weights is a bijection that
// preserves the constraint and the (symmetric) objective.
std::vector<int> reversed_weights(int K, int n_r) {
    std::vector<int> w = singularity_weights(K, n_r);
    std::reverse(w.begin(), w.end());
    return w;
}

ExponentBound assemble(const MacConfig& cfg, detail::OrderedOptimum opt, BoundMethod method) {
    const int K = cfg.num_users;
    const int n_r = cfg.num_rx_antennas;
    const double T = cfg.block_length;
    const double r = cfg.mux_gain;

    ExponentBound bound;
    bound.method = method;
    bound.value = T * opt.value;
    if (K > n_r) bound.value += (K - n_r) * r * T;
    std::reverse(opt.levels.begin(), opt.levels.end());  // back to descending mu
    bound.argmax_levels.levels = std::move(opt.levels);
    return bound;
}

}  // namespace

std::vector<int> singularity_weights(int K, int n_r) {
    if (K < 1 || n_r < 1) throw std::invalid_argument("singularity_weights: K, n_r must be positive");
    const int nu = std::min(K, n_r);
    std::vector<int> w(static_cast<std::size_t>(nu));
    for (int i = 1; i <= nu; ++i) {
        w[static_cast<std::size_t>(i - 1)] = std::abs(K - n_r) + 2 * i - 1;
    }
    return w;
}

ExponentBound complexity_bound_for_dmt(const MacConfig& cfg, double d_target) {
    cfg.validate();
    if (d_target < 0.0) throw std::domain_error("complexity_bound_for_dmt: d_target must be >= 0");
    auto opt = detail::clamp_sum_sup(reversed_weights(cfg.num_users, cfg.num_rx_antennas),
                                     d_target, cfg.mux_gain);
    return assemble(cfg, std::move(opt), BoundMethod::kVertexEnumeration);
}

ExponentBound complexity_bound(const MacConfig& cfg) {
    cfg.validate();
    if (cfg.block_length != 1) {
        throw std::invalid_argument("complexity_bound: stated for the uncoded QAM construction (T = 1)");
    }
    ExponentBound bound = complexity_bound_for_dmt(cfg, mac_dmt(cfg));
    const double ceiling = cfg.mux_gain * cfg.num_users * cfg.block_length;
    bound.value = std::min(bound.value, ceiling);
    return bound;
}

double complexity_bound_single_rx(int K, double r) {
    if (K < 1) throw std::invalid_argument("complexity_bound_single_rx: K must be positive");
    if (r < 0.0 || r > 1.0 / K + 1e-12) {
        throw std::domain_error("complexity_bound_single_rx: r outside [0, 1/K]");
    }
    return (K - 1) * r;
}

double complexity_bound_equal_rx(int K, double r) {
    if (K < 1) throw std::invalid_argument("complexity_bound_equal_rx: K must be positive");
    if (r < 0.0 || r > 1.0 + 1e-12) {
        throw std::domain_error("complexity_bound_equal_rx: r outside [0, 1]");
    }
    const double budget = K * (1.0 - r);
    const double f = std::floor(std::sqrt(std::max(0.0, budget)));
    const double frac = (budget - f * f) / (2.0 * f + 1.0);
    return r * f + std::max(0.0, r - 1.0 + frac);
}

double complexity_bound_many_rx(int K, int n_r, double r) {
    if (n_r <= K) throw std::domain_error("complexity_bound_many_rx: requires n_r > K");
    if (r < 0.0 || r > 1.0 + 1e-12) {
        throw std::domain_error("complexity_bound_many_rx: r outside [0, 1]");
    }
    return std::min(r, (K - 1) * std::max(0.0, 1.0 - r) / (n_r - K + 1));
}

ExponentBound complexity_bound_grid_oracle(const MacConfig& cfg, double d_target, double step,
                                           bool want_argmax, std::size_t cell_cap) {
    cfg.validate();
    if (d_target < 0.0) throw std::domain_error("complexity_bound_grid_oracle: d_target must be >= 0");
    auto opt = detail::clamp_sum_sup_grid(reversed_weights(cfg.num_users, cfg.num_rx_antennas),
                                          d_target, cfg.mux_gain, step, want_argmax, cell_cap);
    return assemble(cfg, std::move(opt), BoundMethod::kGridOracle);
}

}  // namespace macdmt
