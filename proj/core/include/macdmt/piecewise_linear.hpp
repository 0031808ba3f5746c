// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace macdmt {

/// Piecewise-linear curve over strictly increasing x breakpoints.
///
/// Evaluation between breakpoints is exact linear interpolation; evaluation
/// at a breakpoint returns the stored y exactly. Querying outside
/// [x_min, x_max] throws std::domain_error.
class PiecewiseLinearCurve {
public:
    using Point = std::pair<double, double>;

    explicit PiecewiseLinearCurve(std::vector<Point> breakpoints);

    double operator()(double x) const;

    double x_min() const { return points_.front().first; }
    double x_max() const { return points_.back().first; }
    const std::vector<Point>& breakpoints() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<Point> points_;
};

}  // namespace macdmt
