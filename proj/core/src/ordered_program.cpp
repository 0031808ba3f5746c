// SPDX-License-Identifier: Apache-2.0
#include "macdmt/ordered_program.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace macdmt::detail {

namespace {

constexpr double kFeasEps = 1e-9;
constexpr float kNegInf = -1e30f;
constexpr float kPosInf = 1e30f;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double phi(double rho, double x) {
    return std::min(rho, std::max(0.0, rho - 1.0 + x));
}

}  // namespace

OrderedOptimum clamp_sum_sup(const std::vector<int>& weights, double budget, double rho) {
    const int n = static_cast<int>(weights.size());
    if (budget < 0.0) throw std::domain_error("clamp_sum_sup: negative budget");
    if (rho < 0.0) throw std::domain_error("clamp_sum_sup: negative rho");
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("clamp_sum_sup: weights must be positive");
    }
    if (n == 0) return {0.0, {}};

    std::vector<double> pre(n + 1, 0.0);  // pre[i] = w_0 + ... + w_{i-1}
    for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] + weights[i];
    auto wsum = [&](int lo, int hi) { return pre[hi] - pre[lo]; };  // [lo, hi)

    const double a = std::max(0.0, 1.0 - rho);
    OrderedOptimum best{-1.0, {}};
    auto consider = [&](int z, int q, int m, double t, int s) {
        const double val = z * phi(rho, 0.0) + q * phi(rho, a) +
                           m * phi(rho, t) + s * phi(rho, 1.0);
        if (val > best.value) {
            best.value = val;
            best.levels.assign(n, 0.0);
            int idx = z;
            for (int i = 0; i < q; ++i) best.levels[idx++] = a;
            for (int i = 0; i < m; ++i) best.levels[idx++] = t;
            for (int i = 0; i < s; ++i) best.levels[idx++] = 1.0;
        }
    };

    for (int z = 0; z <= n; ++z) {
        for (int q = 0; q + z <= n; ++q) {
            for (int m = 0; z + q + m <= n; ++m) {
                const int s = n - z - q - m;
                const double cost_fixed = a * wsum(z, z + q) + wsum(z + q + m, n);
                if (m == 0) {
                    if (cost_fixed <= budget + kFeasEps) consider(z, q, 0, 0.0, s);
                    continue;
                }
                const double wt = wsum(z + q, z + q + m);
                double t = (budget - cost_fixed) / wt;
                const double lo = (q > 0) ? a : 0.0;
                if (t > 1.0) t = 1.0;
                if (t < lo - 1e-12) continue;  // pattern infeasible
                t = std::max(t, lo);
                consider(z, q, m, t, s);
            }
        }
    }
    return best;
}

OrderedOptimum ordered_linear_inf(const std::vector<double>& weights, double slack) {
    const int n = static_cast<int>(weights.size());
    if (slack < 0.0) throw std::domain_error("ordered_linear_inf: negative slack");
    for (double w : weights) {
        if (w <= 0.0) throw std::invalid_argument("ordered_linear_inf: weights must be positive");
    }
    if (n == 0) return {0.0, {}};
    if (slack >= n) return {0.0, std::vector<double>(n, 0.0)};

    std::vector<double> pre(n + 1, 0.0);
    for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] + weights[i];
    auto wsum = [&](int lo, int hi) { return pre[hi] - pre[lo]; };

    const double need = n - slack;  // required sum of levels
    OrderedOptimum best{std::numeric_limits<double>::infinity(), {}};
    auto consider = [&](int z, int m, double t, int s, double val) {
        if (val < best.value) {
            best.value = val;
            best.levels.assign(n, 0.0);
            int idx = z;
            for (int i = 0; i < m; ++i) best.levels[idx++] = t;
            for (int i = 0; i < s; ++i) best.levels[idx++] = 1.0;
        }
    };

    for (int z = 0; z <= n; ++z) {
        for (int m = 0; z + m <= n; ++m) {
            const int s = n - z - m;
            if (m == 0) {
                if (s >= need - 1e-12) consider(z, 0, 0.0, s, wsum(z, n));
                continue;
            }
            double t = (need - s) / m;
            if (t < -1e-12 || t > 1.0 + 1e-12) continue;
            t = clamp01(t);
            consider(z, m, t, s, t * wsum(z, z + m) + wsum(z + m, n));
        }
    }
    return best;
}

namespace {

// One forward DP layer for the grid supremum. `prev` holds the prefix-maxed
// layer for coordinate i-1 (or is empty for i = 0); `out` receives the
// exact-level layer for coordinate i.
void sup_layer(const std::vector<int>& weights, int i, double rho, double step, int levels,
               long long units, const std::vector<float>& prev, std::vector<float>& out) {
    const long long w = weights[static_cast<std::size_t>(i)];
    const long long ucols = units + 1;
    for (int l = 0; l <= levels; ++l) {
        const double val = phi(rho, l * step);
        float* row = out.data() + static_cast<std::size_t>(l) * ucols;
        const long long spent = w * l;
        if (i == 0) {
            for (long long u = 0; u < ucols; ++u) row[u] = (spent <= u) ? static_cast<float>(val) : kNegInf;
        } else {
            const float* prow = prev.data() + static_cast<std::size_t>(l) * ucols;
            for (long long u = 0; u < ucols; ++u) {
                row[u] = (spent <= u && prow[u - spent] > kNegInf / 2)
                             ? static_cast<float>(val) + prow[u - spent]
                             : kNegInf;
            }
        }
    }
}

void prefix_max_rows(std::vector<float>& layer, int levels, long long units) {
    const long long ucols = units + 1;
    for (int l = 1; l <= levels; ++l) {
        float* cur = layer.data() + static_cast<std::size_t>(l) * ucols;
        const float* lo = layer.data() + static_cast<std::size_t>(l - 1) * ucols;
        for (long long u = 0; u < ucols; ++u) cur[u] = std::max(cur[u], lo[u]);
    }
}

void inf_layer(const std::vector<double>& weights, int i, double step, int levels,
               long long slack_units, const std::vector<float>& prev, std::vector<float>& out) {
    const double w = weights[static_cast<std::size_t>(i)];
    const long long scols = slack_units + 1;
    for (int l = 0; l <= levels; ++l) {
        const double val = w * l * step;
        const long long used = levels - l;  // slack consumed by this coordinate
        float* row = out.data() + static_cast<std::size_t>(l) * scols;
        if (i == 0) {
            for (long long s = 0; s < scols; ++s) row[s] = (used <= s) ? static_cast<float>(val) : kPosInf;
        } else {
            const float* prow = prev.data() + static_cast<std::size_t>(l) * scols;
            for (long long s = 0; s < scols; ++s) {
                row[s] = (used <= s && prow[s - used] < kPosInf / 2)
                             ? static_cast<float>(val) + prow[s - used]
                             : kPosInf;
            }
        }
    }
}

void prefix_min_rows(std::vector<float>& layer, int levels, long long slack_units) {
    const long long scols = slack_units + 1;
    for (int l = 1; l <= levels; ++l) {
        float* cur = layer.data() + static_cast<std::size_t>(l) * scols;
        const float* lo = layer.data() + static_cast<std::size_t>(l - 1) * scols;
        for (long long s = 0; s < scols; ++s) cur[s] = std::min(cur[s], lo[s]);
    }
}

}  // namespace

OrderedOptimum clamp_sum_sup_grid(const std::vector<int>& weights, double budget, double rho,
                                  double step, bool want_argmax, std::size_t state_cap) {
    const int n = static_cast<int>(weights.size());
    if (step <= 0.0) throw std::domain_error("clamp_sum_sup_grid: step must be positive");
    if (budget < 0.0) throw std::domain_error("clamp_sum_sup_grid: negative budget");
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("clamp_sum_sup_grid: weights must be positive");
    }
    if (n == 0) return {0.0, {}};

    const int levels = static_cast<int>(std::floor(1.0 / step + 1e-9));
    long long wsum = 0;
    for (int w : weights) wsum += w;
    long long units = static_cast<long long>(std::floor(budget / step + 1e-9));
    units = std::min(units, wsum * levels);
    if (units < 0) units = 0;

    const std::size_t states = static_cast<std::size_t>(levels + 1) * static_cast<std::size_t>(units + 1);
    if (states > state_cap) throw std::runtime_error("clamp_sum_sup_grid: grid exceeds cell cap");

    // Forward pass keeping only the running prefix-maxed layer.
    std::vector<float> prev, cur(states);
    for (int i = 0; i < n; ++i) {
        sup_layer(weights, i, rho, step, levels, units, prev, cur);
        if (i + 1 < n) {
            prefix_max_rows(cur, levels, units);
            std::swap(prev, cur);
            if (cur.size() != states) cur.assign(states, kNegInf);
        }
    }
    // `cur` is the exact-level final layer; the optimum sits at budget column `units`.
    const long long ucols = units + 1;
    int best_level = 0;
    float best = kNegInf;
    for (int l = 0; l <= levels; ++l) {
        const float v = cur[static_cast<std::size_t>(l) * ucols + units];
        if (v > best) {
            best = v;
            best_level = l;
        }
    }
    OrderedOptimum result;
    result.value = static_cast<double>(best);
    if (!want_argmax) return result;

    // Backward reconstruction: re-run the forward DP up to each predecessor
    // layer. Cheap relative to the main pass for the small n in play.
    std::vector<int> level_idx(static_cast<std::size_t>(n), 0);
    level_idx[static_cast<std::size_t>(n - 1)] = best_level;
    long long u = units;
    double remaining = static_cast<double>(best);
    for (int i = n - 1; i >= 1; --i) {
        const int li = level_idx[static_cast<std::size_t>(i)];
        u -= static_cast<long long>(weights[static_cast<std::size_t>(i)]) * li;
        remaining -= phi(rho, li * step);
        std::vector<float> p, layer(states);
        for (int j = 0; j < i; ++j) {
            sup_layer(weights, j, rho, step, levels, units, p, layer);
            if (j + 1 < i) {
                prefix_max_rows(layer, levels, units);
                std::swap(p, layer);
                if (layer.size() != states) layer.assign(states, kNegInf);
            }
        }
        int chosen = -1;
        for (int l = 0; l <= li; ++l) {
            const float v = layer[static_cast<std::size_t>(l) * ucols + u];
            if (v >= static_cast<float>(remaining) - 1e-4f) {
                chosen = l;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("clamp_sum_sup_grid: argmax reconstruction failed");
        level_idx[static_cast<std::size_t>(i - 1)] = chosen;
    }
    result.levels.resize(static_cast<std::size_t>(n));
    double recomputed = 0.0;
    for (int i = 0; i < n; ++i) {
        result.levels[static_cast<std::size_t>(i)] = level_idx[static_cast<std::size_t>(i)] * step;
        recomputed += phi(rho, result.levels[static_cast<std::size_t>(i)]);
    }
    if (std::abs(recomputed - result.value) > 2e-3) {
        throw std::logic_error("clamp_sum_sup_grid: reconstructed point does not attain the optimum");
    }
    result.value = recomputed;
    return result;
}

OrderedOptimum ordered_linear_inf_grid(const std::vector<double>& weights, double slack,
                                       double step, bool want_argmax, std::size_t state_cap) {
    const int n = static_cast<int>(weights.size());
    if (step <= 0.0) throw std::domain_error("ordered_linear_inf_grid: step must be positive");
    if (slack < 0.0) throw std::domain_error("ordered_linear_inf_grid: negative slack");
    for (double w : weights) {
        if (w <= 0.0) throw std::invalid_argument("ordered_linear_inf_grid: weights must be positive");
    }
    if (n == 0) return {0.0, {}};

    const int levels = static_cast<int>(std::floor(1.0 / step + 1e-9));
    long long slack_units = static_cast<long long>(std::floor(slack / step + 1e-9));
    slack_units = std::min(slack_units, static_cast<long long>(n) * levels);

    const std::size_t states =
        static_cast<std::size_t>(levels + 1) * static_cast<std::size_t>(slack_units + 1);
    if (states > state_cap) throw std::runtime_error("ordered_linear_inf_grid: grid exceeds cell cap");

    std::vector<float> prev, cur(states);
    for (int i = 0; i < n; ++i) {
        inf_layer(weights, i, step, levels, slack_units, prev, cur);
        if (i + 1 < n) {
            prefix_min_rows(cur, levels, slack_units);
            std::swap(prev, cur);
            if (cur.size() != states) cur.assign(states, kPosInf);
        }
    }
    const long long scols = slack_units + 1;
    int best_level = 0;
    float best = kPosInf;
    for (int l = 0; l <= levels; ++l) {
        const float v = cur[static_cast<std::size_t>(l) * scols + slack_units];
        if (v < best) {
            best = v;
            best_level = l;
        }
    }
    if (best >= kPosInf / 2) throw std::logic_error("ordered_linear_inf_grid: infeasible grid");
    OrderedOptimum result;
    result.value = static_cast<double>(best);
    if (!want_argmax) return result;

    std::vector<int> level_idx(static_cast<std::size_t>(n), 0);
    level_idx[static_cast<std::size_t>(n - 1)] = best_level;
    long long s = slack_units;
    double remaining = static_cast<double>(best);
    for (int i = n - 1; i >= 1; --i) {
        const int li = level_idx[static_cast<std::size_t>(i)];
        s -= (levels - li);
        remaining -= weights[static_cast<std::size_t>(i)] * li * step;
        std::vector<float> p, layer(states);
        for (int j = 0; j < i; ++j) {
            inf_layer(weights, j, step, levels, slack_units, p, layer);
            if (j + 1 < i) {
                prefix_min_rows(layer, levels, slack_units);
                std::swap(p, layer);
                if (layer.size() != states) layer.assign(states, kPosInf);
            }
        }
        int chosen = -1;
        for (int l = 0; l <= li; ++l) {
            const float v = layer[static_cast<std::size_t>(l) * scols + s];
            if (v <= static_cast<float>(remaining) + 1e-4f) {
                chosen = l;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("ordered_linear_inf_grid: argmin reconstruction failed");
        level_idx[static_cast<std::size_t>(i - 1)] = chosen;
    }
    result.levels.resize(static_cast<std::size_t>(n));
    double recomputed = 0.0;
    for (int i = 0; i < n; ++i) {
        result.levels[static_cast<std::size_t>(i)] = level_idx[static_cast<std::size_t>(i)] * step;
        recomputed += weights[static_cast<std::size_t>(i)] * result.levels[static_cast<std::size_t>(i)];
    }
    if (std::abs(recomputed - result.value) > 2e-3) {
        throw std::logic_error("ordered_linear_inf_grid: reconstructed point does not attain the optimum");
    }
    result.value = recomputed;
    return result;
}

}  // namespace macdmt::detail
