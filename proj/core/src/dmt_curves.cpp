// SPDX-License-Identifier: Apache-2.0
#include "macdmt/dmt_curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace macdmt {

namespace {

constexpr double kBranchContinuityTol = 1e-12;

// Lightly-loaded branch, clamped at zero (the clamp only binds for n_r > K).
double light_branch(int n_r, double r) {
    return std::max(0.0, n_r * (1.0 - r));
}

// Heavily-loaded branch d*_{K,n_r}(K r), extended by 0 where K r exceeds the
// MIMO curve domain (again only reachable for n_r > K).
double heavy_branch(int K, int n_r, double r) {
    const double x = K * r;
    const int nu = std::min(K, n_r);
    if (x >= static_cast<double>(nu)) return 0.0;
    return mimo_dmt(K, n_r, x);
}

void check_branch_continuity(int K, int n_r) {
    const double boundary = static_cast<double>(n_r) / (K + 1);
    const double lo = light_branch(n_r, boundary);
    const double hi = heavy_branch(K, n_r, boundary);
    if (std::abs(lo - hi) > kBranchContinuityTol) {
        throw std::logic_error("mac_dmt: branch mismatch at r = n_r/(K+1)");
    }
}

}  // namespace

int MacConfig::nu() const { return std::min(num_users, num_rx_antennas); }

double MacConfig::max_mux_gain() const {
    return static_cast<double>(num_rx_antennas) / num_users;
}

void MacConfig::validate() const {
    if (num_users < 1 || num_rx_antennas < 1) {
        throw std::invalid_argument("MacConfig: K and n_r must be positive");
    }
    if (block_length < 1) {
        throw std::invalid_argument("MacConfig: T must be positive");
    }
    if (mux_gain < 0.0 || mux_gain > max_mux_gain() + 1e-12) {
        throw std::domain_error("MacConfig: r must lie in [0, n_r/K]");
    }
}

PiecewiseLinearCurve mimo_dmt_curve(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("mimo_dmt_curve: m, n must be positive");
    const int kmax = std::min(m, n);
    std::vector<PiecewiseLinearCurve::Point> pts;
    pts.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        pts.emplace_back(static_cast<double>(k),
                         static_cast<double>((m - k) * (n - k)));
    }
    return PiecewiseLinearCurve(std::move(pts));
}

double mimo_dmt(int m, int n, double r) {
    if (m < 1 || n < 1) throw std::invalid_argument("mimo_dmt: m, n must be positive");
    const int kmax = std::min(m, n);
    if (r < 0.0 || r > static_cast<double>(kmax)) {
        throw std::domain_error("mimo_dmt: r outside [0, min(m,n)]");
    }
    int k = static_cast<int>(std::floor(r));
    if (k >= kmax) return 0.0;
    const double y0 = static_cast<double>((m - k) * (n - k));
    const double y1 = static_cast<double>((m - k - 1) * (n - k - 1));
    return y0 + (r - k) * (y1 - y0);
}

PiecewiseLinearCurve mac_dmt_curve(int K, int n_r) {
    if (K < 1 || n_r < 1) throw std::invalid_argument("mac_dmt_curve: K, n_r must be positive");
    check_branch_continuity(K, n_r);

    const double r_end = static_cast<double>(n_r) / K;
    std::vector<PiecewiseLinearCurve::Point> pts;
    pts.emplace_back(0.0, static_cast<double>(n_r));
    if (n_r > K) {
        // n_r (1-r)^+ over [0, n_r/K].
        pts.emplace_back(1.0, 0.0);
        pts.emplace_back(r_end, 0.0);
        return PiecewiseLinearCurve(std::move(pts));
    }
    const double boundary = static_cast<double>(n_r) / (K + 1);
    pts.emplace_back(boundary, light_branch(n_r, boundary));
    // Zheng-Tse knots of the heavy branch live at r = j/K for integer j.
    for (int j = static_cast<int>(std::floor(K * boundary)) + 1; j < n_r; ++j) {
        const double x = static_cast<double>(j) / K;
        if (x > boundary) pts.emplace_back(x, heavy_branch(K, n_r, x));
    }
    pts.emplace_back(r_end, 0.0);
    return PiecewiseLinearCurve(std::move(pts));
}

double mac_dmt(int K, int n_r, double r) {
    MacConfig cfg{K, n_r, 1, r};
    cfg.validate();
    check_branch_continuity(K, n_r);
    const double boundary = static_cast<double>(n_r) / (K + 1);
    if (r <= boundary) return light_branch(n_r, r);
    return heavy_branch(K, n_r, std::min(r, cfg.max_mux_gain()));
}

double mac_dmt(const MacConfig& cfg) {
    return mac_dmt(cfg.num_users, cfg.num_rx_antennas, cfg.mux_gain);
}

}  // namespace macdmt
