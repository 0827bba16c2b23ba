#include "pfptopo/fit.hpp"

#include <cmath>
#include <vector>

namespace pfp {

std::optional<double> fit_power_law(
    std::span<const std::pair<double, double>> points, double x_lo,
    double x_hi) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points)
    if (x >= x_lo && x <= x_hi && x > 0 && y > 0)
      logs.emplace_back(std::log(x), std::log(y));
  if (logs.size() < 3) return std::nullopt;

  double mx = 0, my = 0;
  for (const auto& [lx, ly] : logs) {
    mx += lx;
    my += ly;
  }
  mx /= static_cast<double>(logs.size());
  my /= static_cast<double>(logs.size());

  double sxx = 0, sxy = 0;
  for (const auto& [lx, ly] : logs) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  if (sxx <= 0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace pfp
