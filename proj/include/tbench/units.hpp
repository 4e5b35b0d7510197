// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace tbench {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline double wavelength_m(double f_hz) { return kSpeedOfLight / f_hz; }

// Maps any angle to [0, 2*pi).
inline double wrap_2pi(double rad) {
  double r = std::fmod(rad, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Maps any angle to (-pi, pi].
inline double wrap_pi(double rad) {
  double r = std::fmod(rad + kPi, kTwoPi);
  if (r <= 0.0) r += kTwoPi;
  return r - kPi;
}

} // namespace tbench
