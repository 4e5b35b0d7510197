// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tbench/irs.hpp"
#include "tbench/rng.hpp"
#include "tbench/units.hpp"

using namespace tbench;

namespace {

IrsLinkConfig random_cfg(RngStream& rng, std::size_t n) {
  IrsLinkConfig cfg;
  cfg.beta_d = db_to_lin(rng.uniform(-120.0, -60.0));
  cfg.psi_d_rad = rng.uniform(0.0, kTwoPi);
  cfg.n_elements = n;
  cfg.beta_irs = db_to_lin(rng.uniform(-170.0, -120.0));
  for (std::size_t i = 0; i < n; ++i) {
    cfg.psi_tx_rad.push_back(rng.uniform(0.0, kTwoPi));
    cfg.psi_rx_rad.push_back(rng.uniform(0.0, kTwoPi));
  }
  cfg.tx_power_w = 0.01;
  cfg.noise_w = 1e-13;
  return cfg;
}

} // namespace

TEST_CASE("composite gain with no elements reduces to the direct path") {
  IrsLinkConfig cfg;
  cfg.beta_d = 1e-10;
  cfg.psi_d_rad = 1.1;
  CHECK(composite_gain(cfg, {}) == doctest::Approx(1e-10).epsilon(1e-12));
}

TEST_CASE("one perfectly aligned element gives (sqrt(bd)+sqrt(bi))^2") {
  IrsLinkConfig cfg;
  cfg.beta_d = 4e-10;
  cfg.psi_d_rad = 0.7;
  cfg.n_elements = 1;
  cfg.beta_irs = 1e-12;
  cfg.psi_tx_rad = {1.9};
  cfg.psi_rx_rad = {2.3};
  IrsPhaseConfig phases{{wrap_2pi(1.9 + 2.3 - 0.7)}};
  const double expect = std::pow(std::sqrt(4e-10) + std::sqrt(1e-12), 2.0);
  CHECK(composite_gain(cfg, phases) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("phase list length mismatch is rejected") {
  IrsLinkConfig cfg;
  cfg.beta_d = 1e-10;
  cfg.n_elements = 2;
  cfg.beta_irs = 1e-15;
  cfg.psi_tx_rad = {0.0, 0.0};
  cfg.psi_rx_rad = {0.0, 0.0};
  CHECK_THROWS_AS(composite_gain(cfg, {{0.0}}), std::invalid_argument);
}

TEST_CASE("optimal phases: all-zero environment phases give zero delays") {
  IrsLinkConfig cfg;
  cfg.beta_d = 1e-10;
  cfg.n_elements = 3;
  cfg.beta_irs = 1e-15;
  cfg.psi_tx_rad = {0.0, 0.0, 0.0};
  cfg.psi_rx_rad = {0.0, 0.0, 0.0};
  for (double phi : optimal_phases(cfg).phi_rad) CHECK(phi == 0.0);
}

TEST_CASE("optimal phases achieve the closed-form bound on random configs") {
  RngStream rng(43, 0);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t n = rng.uniform_int(64);
    const IrsLinkConfig cfg = random_cfg(rng, n);
    const double achieved = composite_gain(cfg, optimal_phases(cfg));
    CHECK(achieved == doctest::Approx(optimal_gain_bound(cfg)).epsilon(1e-12));
  }
}

TEST_CASE("random phases never beat the optimum") {
  RngStream rng(47, 0);
  for (int rep = 0; rep < 10000; ++rep) {
    const std::size_t n = 1 + rng.uniform_int(32);
    const IrsLinkConfig cfg = random_cfg(rng, n);
    IrsPhaseConfig random_phases;
    for (std::size_t i = 0; i < n; ++i)
      random_phases.phi_rad.push_back(rng.uniform(0.0, kTwoPi));
    const double bound = composite_gain(cfg, optimal_phases(cfg));
    CHECK(composite_gain(cfg, random_phases) <= bound * (1.0 + 1e-12));
  }
}

TEST_CASE("derived closed-form spot value: N=400 surface") {
  IrsLinkConfig cfg;
  cfg.beta_d = 1e-10;
  cfg.n_elements = 400;
  cfg.beta_irs = 1e-15;
  cfg.psi_tx_rad.assign(400, 0.0);
  cfg.psi_rx_rad.assign(400, 0.0);
  const double gain = composite_gain(cfg, optimal_phases(cfg));
  const double expect = std::pow(1e-5 + 400.0 * std::pow(10.0, -7.5), 2.0);
  CHECK(gain == doctest::Approx(expect).epsilon(1e-12));
  CHECK(lin_to_db(gain) == doctest::Approx(-92.899).epsilon(1e-4));
}

TEST_CASE("optimum is non-decreasing in the element count") {
  IrsLinkConfig cfg;
  cfg.beta_d = 1e-10;
  cfg.beta_irs = 1e-15;
  double prev = 0.0;
  for (std::size_t n : {0UL, 1UL, 4UL, 64UL, 256UL, 1024UL}) {
    cfg.n_elements = n;
    cfg.psi_tx_rad.assign(n, 0.25);
    cfg.psi_rx_rad.assign(n, 0.5);
    const double g = composite_gain(cfg, optimal_phases(cfg));
    CHECK(g >= prev);
    prev = g;
  }
}

TEST_CASE("common phase shift of direct and tx paths leaves the gain unchanged") {
  RngStream rng(53, 0);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 1 + rng.uniform_int(16);
    IrsLinkConfig cfg = random_cfg(rng, n);
    IrsPhaseConfig phases;
    for (std::size_t i = 0; i < n; ++i) phases.phi_rad.push_back(rng.uniform(0.0, kTwoPi));
    const double before = composite_gain(cfg, phases);

    const double shift = rng.uniform(0.0, kTwoPi);
    IrsLinkConfig shifted = cfg;
    shifted.psi_d_rad += shift;
    for (auto& p : shifted.psi_tx_rad) p += shift;
    CHECK(composite_gain(shifted, phases) == doctest::Approx(before).epsilon(1e-12));
  }
}

TEST_CASE("optimum is invariant under a common shift of psi_d, psi_tx and phi") {
  RngStream rng(59, 0);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 1 + rng.uniform_int(16);
    IrsLinkConfig cfg = random_cfg(rng, n);
    const double best = composite_gain(cfg, optimal_phases(cfg));

    const double shift = rng.uniform(0.0, kTwoPi);
    IrsLinkConfig shifted = cfg;
    shifted.psi_d_rad += shift;
    for (auto& p : shifted.psi_tx_rad) p += shift;
    IrsPhaseConfig phases = optimal_phases(shifted); // equals original phi mod 2pi
    for (std::size_t i = 0; i < n; ++i)
      CHECK(phases.phi_rad[i] ==
            doctest::Approx(optimal_phases(cfg).phi_rad[i]).epsilon(1e-9));
    CHECK(composite_gain(shifted, phases) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("spectral efficiency: zero SNR gives zero") {
  IrsLinkConfig cfg;
  cfg.beta_d = 1e-30;
  cfg.tx_power_w = 0.0;
  cfg.noise_w = 1e-13;
  CHECK(spectral_efficiency(cfg, {}) == 0.0);
}

TEST_CASE("spot spectral efficiencies under the documented noise assumption") {
  // 10 mW over 20 MHz, -174 dBm/Hz, 0 dB NF: sigma^2 = -100.99 dBm.
  const double noise_w = dbm_to_watts(-174.0 + 10.0 * std::log10(20e6));
  IrsLinkConfig cfg;
  cfg.tx_power_w = 0.01;
  cfg.noise_w = noise_w;
  cfg.beta_d = db_to_lin(-100.0);

  // Baseline, no surface: SNR = 10 dBm - (-100.99 dBm) - 100 dB = 11.0 dB.
  const double se0 = spectral_efficiency(cfg, {});
  const double snr0 = cfg.tx_power_w * cfg.beta_d / noise_w;
  CHECK(se0 == doctest::Approx(std::log2(1.0 + snr0)).epsilon(1e-12));
  CHECK(lin_to_db(snr0) == doctest::Approx(11.0).epsilon(1e-3));
  CHECK(se0 == doctest::Approx(3.76).epsilon(0.01));

  // N = 1024 co-phased elements.
  cfg.n_elements = 1024;
  cfg.beta_irs = db_to_lin(-150.0);
  cfg.psi_tx_rad.assign(1024, 0.0);
  cfg.psi_rx_rad.assign(1024, 0.0);
  const double se1 = spectral_efficiency(cfg, optimal_phases(cfg));
  const double gain = std::pow(1e-5 + 1024.0 * std::pow(10.0, -7.5), 2.0);
  CHECK(se1 == doctest::Approx(std::log2(1.0 + cfg.tx_power_w * gain / noise_w))
                   .epsilon(1e-12));
  CHECK(se1 > se0 + 3.5); // the weak-direct-path case gains several b/s/Hz
}

TEST_CASE("deployment sweep: endpoint gains dominate and floor at the baseline") {
  const Point2D tx{0.0, 0.0};
  const Point2D rx{45.0, 0.0};
  std::vector<Point2D> track;
  for (int i = 0; i <= 80; ++i)
    track.push_back({2.5 + 0.5 * static_cast<double>(i), 5.0});
  const double beta_d = db_to_lin(-75.0);
  const double lambda = 0.1;
  const auto sweep = deployment_sweep(tx, rx, track, 1024, lambda, beta_d, 0.01,
                                      dbm_to_watts(-101.0));
  REQUIRE(sweep.size() == track.size());
  for (const auto& pt : sweep) CHECK(pt.gain >= beta_d);
  const double mid = sweep[sweep.size() / 2].gain;
  CHECK(sweep.front().gain > mid);
  CHECK(sweep.back().gain > mid);

  // Symmetric geometry: the gain profile mirrors about the midpoint.
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const auto j = sweep.size() - 1 - i;
    CHECK(sweep[i].gain == doctest::Approx(sweep[j].gain).epsilon(1e-9));
  }
}
