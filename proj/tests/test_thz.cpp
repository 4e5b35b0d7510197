// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "tbench/thz.hpp"
#include "tbench/units.hpp"

using namespace tbench;
using namespace tbench::thz;

TEST_CASE("spreading loss: unit argument, spot values, distance-squared law") {
  const double d0 = kSpeedOfLight / (4.0 * kPi * 300e9);
  CHECK(spreading_loss_db(300e9, d0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spreading_loss_db(300e9, 1.0) == doctest::Approx(81.98).epsilon(1e-3));
  CHECK(spreading_loss_db(300e9, 100.0) - spreading_loss_db(300e9, 1.0) ==
        doctest::Approx(40.0).epsilon(1e-12));
}

TEST_CASE("absorption loss: zero coefficient, linearity, additive budget") {
  CHECK(absorption_loss_db(0.0, 100.0) == 0.0);
  CHECK(absorption_loss_db(0.02, 50.0) * 2.0 ==
        doctest::Approx(absorption_loss_db(0.04, 50.0)).epsilon(1e-12));
  // Total budget is the dB sum of spreading and absorption.
  const double total = spreading_loss_db(1e12, 10.0) + absorption_loss_db(0.01, 10.0);
  CHECK(total == doctest::Approx(spreading_loss_db(1e12, 10.0) +
                                 10.0 * std::log10(std::exp(1.0)) * 0.1)
                     .epsilon(1e-12));
}

TEST_CASE("rayleigh distance: plug-ins and bilinearity") {
  // 2x2 per side, 5 mm spacing, lambda = 0.3 mm.
  CHECK(rayleigh_distance_m(4, 5e-3, 5e-3, 3e-4) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // 128x128 per side, 1 mm spacing, lambda = 1 mm.
  CHECK(rayleigh_distance_m(16384, 1e-3, 1e-3, 1e-3) ==
        doctest::Approx(16.384).epsilon(1e-12));
  // Doubling both separations quadruples the distance.
  CHECK(rayleigh_distance_m(4, 2e-3, 2e-3, 3e-4) ==
        doctest::Approx(4.0 * rayleigh_distance_m(4, 1e-3, 1e-3, 3e-4)).epsilon(1e-12));
}

TEST_CASE("optimal separation: inverse pair and scaling") {
  const double delta = optimal_separation_m(1.0, 256, 3e-4);
  CHECK(delta == doctest::Approx(1.0825e-3).epsilon(1e-4));
  CHECK(rayleigh_distance_m(256, delta, delta, 3e-4) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(optimal_separation_m(4.0, 256, 3e-4) ==
        doctest::Approx(2.0 * delta).epsilon(1e-12));
}

TEST_CASE("LoS channel: 1x1 is the scalar free-space response") {
  ArrayConfig cfg;
  cfg.rows = cfg.cols = 1;
  cfg.fc_hz = 1e12;
  cfg.range_m = 2.0;
  const auto h = los_channel(cfg);
  REQUIRE(h.rows == 1);
  const double lambda = wavelength_m(1e12);
  CHECK(std::abs(h.at(0, 0)) == doctest::Approx(lambda / (4.0 * kPi * 2.0)));
}

TEST_CASE("LoS channel conditioning: per-axis tuning vs collapse") {
  ArrayConfig cfg;
  cfg.rows = cfg.cols = 2;
  cfg.fc_hz = 1e12;
  cfg.range_m = 1.0;
  const double lambda = wavelength_m(cfg.fc_hz);
  // Per-axis rule: each 2-element axis needs delta^2 = D*lambda/2.
  const double delta = optimal_separation_m(cfg.range_m, 2, lambda);
  cfg.delta_t_m = cfg.delta_r_m = delta;
  CHECK(condition_number(los_channel(cfg)) <= 1.05);

  cfg.delta_t_m = cfg.delta_r_m = delta / 10.0;
  CHECK(condition_number(los_channel(cfg)) > 100.0);
}

TEST_CASE("singular values: invariant to global phase and to transposition") {
  ArrayConfig cfg;
  cfg.rows = cfg.cols = 2;
  cfg.fc_hz = 1e12;
  cfg.range_m = 0.8;
  cfg.delta_t_m = 2e-3;
  cfg.delta_r_m = 3e-3; // asymmetric sides
  const auto h = los_channel(cfg);
  const auto sv = singular_values(h);

  ComplexMatrix rotated = h;
  for (auto& v : rotated.data) v *= std::polar(1.0, 1.234);
  const auto sv_rot = singular_values(rotated);

  ComplexMatrix transposed(h.cols, h.rows);
  for (std::size_t r = 0; r < h.rows; ++r)
    for (std::size_t c = 0; c < h.cols; ++c) transposed.at(c, r) = h.at(r, c);
  const auto sv_t = singular_values(transposed);

  for (std::size_t i = 0; i < sv.size(); ++i) {
    CHECK(sv[i] == doctest::Approx(sv_rot[i]).epsilon(1e-12));
    CHECK(sv[i] == doctest::Approx(sv_t[i]).epsilon(1e-12));
  }

  // Swapping the per-side separations mirrors reciprocity.
  ArrayConfig swapped = cfg;
  std::swap(swapped.delta_t_m, swapped.delta_r_m);
  const auto sv_sw = singular_values(los_channel(swapped));
  for (std::size_t i = 0; i < sv.size(); ++i)
    CHECK(sv[i] == doctest::Approx(sv_sw[i]).epsilon(1e-12));
}

TEST_CASE("eigenchannel capacities: orthogonal limit within 1%") {
  ArrayConfig cfg;
  cfg.rows = cfg.cols = 2;
  cfg.fc_hz = 1e12;
  cfg.range_m = 1.0;
  cfg.delta_t_m = cfg.delta_r_m = optimal_separation_m(1.0, 2, wavelength_m(cfg.fc_hz));
  const auto sv = singular_values(los_channel(cfg));
  double mean_sq = 0.0;
  for (double s : sv) mean_sq += s * s / static_cast<double>(sv.size());
  const double snr = db_to_lin(15.0);
  double cap = 0.0;
  for (double s : sv) cap += std::log2(1.0 + snr * s * s / mean_sq);
  const double ideal = static_cast<double>(sv.size()) * std::log2(1.0 + snr);
  CHECK(cap == doctest::Approx(ideal).epsilon(0.01));
}

TEST_CASE("multiplex BER: tuned channel clean, mistuned channel floors") {
  ArrayConfig cfg;
  cfg.rows = cfg.cols = 2;
  cfg.fc_hz = 1e12;
  cfg.range_m = 1.0;
  const double delta = optimal_separation_m(1.0, 2, wavelength_m(cfg.fc_hz));

  SUBCASE("tuned: strictly decreasing, reaches 1e-5 with no floor") {
    cfg.delta_t_m = cfg.delta_r_m = delta;
    const double grid[] = {6.0, 12.0, 18.0, 24.0};
    const auto pts = multiplex_ber(cfg, grid, 400000, RngStream(211, 0));
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].ber < pts[i - 1].ber);
    CHECK(pts.front().ber > 1e-2);
    CHECK(pts.back().ber < 1e-5);
  }

  SUBCASE("mistuned by 10x: the dead streams pin the error rate") {
    cfg.delta_t_m = cfg.delta_r_m = delta / 10.0;
    const double grid[] = {50.0, 60.0};
    const auto pts = multiplex_ber(cfg, grid, 50000, RngStream(223, 0));
    CHECK(pts[1].ber > 0.01); // far above any clean-channel value
    CHECK(std::abs(pts[1].ber - pts[0].ber) < 0.2 * pts[0].ber);
  }

  SUBCASE("beamforming gain acts as an exact SNR offset") {
    cfg.delta_t_m = cfg.delta_r_m = delta;
    const double lo[] = {12.0};
    const double hi[] = {72.0};
    const auto with_gain = multiplex_ber(cfg, lo, 50000, RngStream(227, 0), 60.0);
    const auto shifted = multiplex_ber(cfg, hi, 50000, RngStream(227, 0), 0.0);
    CHECK(with_gain[0].ber == shifted[0].ber); // same draws, same effective SNR
  }
}

TEST_CASE("single-antenna BER matches the exact Gray-mapped oracle") {
  // Independent oracle: per-axis 4-PAM decision probabilities via the
  // Gaussian CDF, weighted by Gray-label bit distances. A 1x1 array makes
  // the eigenchannel simulation a plain AWGN link.
  auto exact_ber = [](double snr_lin) {
    const double norm = std::sqrt(10.0);
    const double levels[4] = {-3.0 / norm, -1.0 / norm, 1.0 / norm, 3.0 / norm};
    const unsigned gray[4] = {0u, 1u, 3u, 2u};
    const double sigma_axis = std::sqrt(0.5 / snr_lin);
    auto cdf = [&](double x) { return 0.5 * std::erfc(-x / (sigma_axis * std::sqrt(2.0))); };
    double bits_wrong = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double lo = j == 0 ? -1e9 : 0.5 * (levels[j - 1] + levels[j]);
        const double hi = j == 3 ? 1e9 : 0.5 * (levels[j] + levels[j + 1]);
        const double p = cdf(hi - levels[i]) - cdf(lo - levels[i]);
        bits_wrong += 0.25 * p * __builtin_popcount(gray[i] ^ gray[j]);
      }
    }
    return bits_wrong / 2.0; // two bits per axis
  };

  ArrayConfig cfg;
  cfg.rows = cfg.cols = 1;
  cfg.fc_hz = 1e12;
  cfg.range_m = 1.0;
  const double grid[] = {8.0, 12.0, 16.0};
  const auto pts = multiplex_ber(cfg, grid, 2000000, RngStream(229, 0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double expect = exact_ber(db_to_lin(grid[i]));
    CHECK(pts[i].ber == doctest::Approx(expect).epsilon(0.05));
  }
}
