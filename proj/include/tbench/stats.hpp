// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace tbench {

// Empirical quantiles with linear interpolation between order statistics.
// Levels are percent values in [0, 100]. Throws on empty input.
std::map<double, double> percentiles(std::span<const double> samples,
                                     std::span<const double> levels);

double percentile(std::span<const double> samples, double level);

struct WilsonCI {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for a binomial proportion (default z: 95%).
WilsonCI wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

} // namespace tbench
