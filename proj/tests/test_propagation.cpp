// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tbench/propagation.hpp"
#include "tbench/units.hpp"

using namespace tbench;

TEST_CASE("noise power: definitions and derived values") {
  CHECK(noise_power_dbm({-174.0, 1.0, 0.0}) == doctest::Approx(-174.0));
  // 20 MHz + 9 dB NF: -174 + 73.01 + 9
  CHECK(noise_power_dbm({-174.0, 20e6, 9.0}) == doctest::Approx(-91.9897).epsilon(1e-6));
  CHECK(noise_power_dbm({-174.0, 1e9, 0.0}) == doctest::Approx(-84.0).epsilon(1e-9));
  CHECK(noise_power_watts({-174.0, 20e6, 9.0}) ==
        doctest::Approx(6.3246e-13).epsilon(1e-4));
}

TEST_CASE("noise power increases with bandwidth and noise figure") {
  const double base = noise_power_dbm({-174.0, 1e6, 0.0});
  CHECK(noise_power_dbm({-174.0, 2e6, 0.0}) > base);
  CHECK(noise_power_dbm({-174.0, 1e6, 3.0}) > base);
  CHECK_THROWS_AS(noise_power_dbm({-174.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("close-in path loss reference point and derived value") {
  const CloseInParams ref{2.0, 3.0, 1.0};
  CHECK(closein_pathloss_db(1.0, ref, true) == doctest::Approx(32.4));
  const CloseInParams mmw{2.0, 3.0, 28.0};
  // 32.4 + 40 + 28.94
  CHECK(closein_pathloss_db(100.0, mmw, true) == doctest::Approx(101.3432).epsilon(1e-5));
  CHECK_THROWS_AS(closein_pathloss_db(0.5, ref, true), std::invalid_argument);
}

TEST_CASE("close-in path loss is strictly increasing in r, alpha, fc") {
  const CloseInParams p{2.0, 3.0, 28.0};
  CHECK(closein_pathloss_db(200.0, p, true) > closein_pathloss_db(100.0, p, true));
  CHECK(closein_pathloss_db(100.0, p, false) > closein_pathloss_db(100.0, p, true));
  const CloseInParams hi{2.0, 3.0, 60.0};
  CHECK(closein_pathloss_db(100.0, hi, true) > closein_pathloss_db(100.0, p, true));
}

TEST_CASE("rayleigh draws: empty, unit mean power, half-variance components") {
  RngStream rng(31, 0);
  CHECK(rayleigh_draw(rng, 0).empty());
  const auto h = rayleigh_draw(rng, 1000000);
  double power = 0.0;
  double re2 = 0.0;
  double im2 = 0.0;
  for (const auto& v : h) {
    power += std::norm(v);
    re2 += v.real() * v.real();
    im2 += v.imag() * v.imag();
  }
  const double n = static_cast<double>(h.size());
  CHECK(power / n == doctest::Approx(1.0).epsilon(0.005));
  CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("three-slope model: far-slope doubling drops 35*log10(2) dB") {
  ThreeSlopeParams p;
  p.shadowing = false;
  const double g1 = three_slope_gain_db(100.0, p);
  const double g2 = three_slope_gain_db(200.0, p);
  CHECK(g1 - g2 == doctest::Approx(35.0 * std::log10(2.0)).epsilon(1e-9));
}

TEST_CASE("three-slope model: gain monotone non-increasing without shadowing") {
  ThreeSlopeParams p;
  p.shadowing = false;
  RngStream rng(37, 0);
  double prev = 1e9;
  for (double d = 2.0; d < 1500.0; d *= 1.23) {
    const double b = cellfree_beta(d, p, rng);
    CHECK(b <= prev + 1e-18);
    prev = b;
  }
}

TEST_CASE("three-slope model: continuity at the slope breaks") {
  ThreeSlopeParams p;
  CHECK(three_slope_gain_db(p.d1_m - 1e-9, p) ==
        doctest::Approx(three_slope_gain_db(p.d1_m + 1e-9, p)).epsilon(1e-6));
}

TEST_CASE("shadowing detrended residual is Gaussian with the configured sigma") {
  // Kolmogorov-Smirnov against N(0, 8 dB) at the 1% level.
  ThreeSlopeParams with_sh;
  ThreeSlopeParams no_sh;
  no_sh.shadowing = false;
  RngStream rng(41, 0);
  const double d = 300.0; // far slope, shadowing active
  const int n = 5000;
  std::vector<double> z(n);
  for (int i = 0; i < n; ++i) {
    const double b = cellfree_beta(d, with_sh, rng);
    const double trend = three_slope_gain_db(d, no_sh);
    z[static_cast<std::size_t>(i)] = (lin_to_db(b) - trend) / with_sh.shadow_sigma_db;
  }
  std::sort(z.begin(), z.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cdf = 0.5 * std::erfc(-z[static_cast<std::size_t>(i)] / std::sqrt(2.0));
    const double e1 = std::abs(cdf - static_cast<double>(i) / n);
    const double e2 = std::abs(cdf - static_cast<double>(i + 1) / n);
    ks = std::max({ks, e1, e2});
  }
  // 1% critical value: 1.63 / sqrt(n)
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));
}
