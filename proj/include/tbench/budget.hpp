// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>

namespace tbench {

struct CapacityBudget {
  double multiplexing = 0.0;
  double bandwidth_hz = 0.0;
  double se_bps_hz = 0.0;
  double total_bps = 0.0;
};

// Capacity identity: multiplexing * bandwidth * spectral efficiency = total.
// With all three factors given, reports the product they reach; with exactly
// one absent, solves it so the product hits the target (default 1 Tb/s).
inline CapacityBudget terabit_budget(std::optional<double> multiplexing,
                                     std::optional<double> bandwidth_hz,
                                     std::optional<double> se_bps_hz,
                                     double target_bps = 1e12) {
  for (const auto& f : {multiplexing, bandwidth_hz, se_bps_hz})
    if (f && *f <= 0.0)
      throw std::invalid_argument("budget factors must be positive");
  if (target_bps <= 0.0) throw std::invalid_argument("target must be positive");

  const int missing = !multiplexing + !bandwidth_hz + !se_bps_hz;
  if (missing > 1)
    throw std::invalid_argument("at least two of the three factors are required");

  CapacityBudget out;
  if (missing == 0) {
    out.multiplexing = *multiplexing;
    out.bandwidth_hz = *bandwidth_hz;
    out.se_bps_hz = *se_bps_hz;
    out.total_bps = out.multiplexing * out.bandwidth_hz * out.se_bps_hz;
    return out;
  }
  out.multiplexing = multiplexing.value_or(0.0);
  out.bandwidth_hz = bandwidth_hz.value_or(0.0);
  out.se_bps_hz = se_bps_hz.value_or(0.0);
  if (!multiplexing) out.multiplexing = target_bps / (*bandwidth_hz * *se_bps_hz);
  if (!bandwidth_hz) out.bandwidth_hz = target_bps / (*multiplexing * *se_bps_hz);
  if (!se_bps_hz) out.se_bps_hz = target_bps / (*multiplexing * *bandwidth_hz);
  out.total_bps = out.multiplexing * out.bandwidth_hz * out.se_bps_hz;
  return out;
}

} // namespace tbench
