#pragma once

#include <optional>
#include <span>
#include <utility>

namespace pfp {

// Ordinary least-squares slope of ln y against ln x, restricted to points
// with x_lo <= x <= x_hi and y > 0. Needs at least 3 such points and at
// least 2 distinct x; otherwise the exponent is undefined.
std::optional<double> fit_power_law(
    std::span<const std::pair<double, double>> points, double x_lo,
    double x_hi);

}  // namespace pfp
