// SPDX-License-Identifier: Apache-2.0
#include "tbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbench {

namespace {

double quantile_sorted(const std::vector<double>& sorted, double level) {
  if (level < 0.0 || level > 100.0)
    throw std::invalid_argument("percentile level must be in [0, 100]");
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = (static_cast<double>(n) - 1.0) * level / 100.0;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

std::map<double, double> percentiles(std::span<const double> samples,
                                     std::span<const double> levels) {
  if (samples.empty()) throw std::invalid_argument("percentiles: empty sample set");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::map<double, double> out;
  for (double level : levels) out[level] = quantile_sorted(sorted, level);
  return out;
}

double percentile(std::span<const double> samples, double level) {
  const double lv[1] = {level};
  return percentiles(samples, lv).at(level);
}

WilsonCI wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: no trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = p + z2 / (2.0 * n);
  const double margin = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  WilsonCI ci;
  ci.lo = std::max(0.0, (center - margin) / denom);
  ci.hi = std::min(1.0, (center + margin) / denom);
  return ci;
}

} // namespace tbench
