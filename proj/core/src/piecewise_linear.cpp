// SPDX-License-Identifier: Apache-2.0
#include "macdmt/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace macdmt {

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<Point> breakpoints)
    : points_(std::move(breakpoints)) {
    if (points_.size() < 2) {
        throw std::invalid_argument("PiecewiseLinearCurve: need at least 2 breakpoints");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i - 1].first < points_[i].first)) {
            throw std::invalid_argument("PiecewiseLinearCurve: x must be strictly increasing");
        }
    }
}

double PiecewiseLinearCurve::operator()(double x) const {
    if (x < points_.front().first || x > points_.back().first) {
        throw std::domain_error("PiecewiseLinearCurve: x outside [x_min, x_max]");
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const Point& p, double v) { return p.first < v; });
    if (it != points_.end() && it->first == x) {
        return it->second;  // breakpoint-exact
    }
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    const double t = (x - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
}

}  // namespace macdmt
