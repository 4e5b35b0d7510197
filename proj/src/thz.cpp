// SPDX-License-Identifier: Apache-2.0
#include "tbench/thz.hpp"

#include <cmath>
#include <stdexcept>

#include "tbench/pqam.hpp"
#include "tbench/stats.hpp"
#include "tbench/units.hpp"

namespace tbench::thz {

double spreading_loss_db(double f_hz, double d_m) {
  if (f_hz <= 0.0 || d_m <= 0.0)
    throw std::invalid_argument("frequency and distance must be positive");
  return 20.0 * std::log10(4.0 * kPi * d_m * f_hz / kSpeedOfLight);
}

double absorption_loss_db(double k_abs_per_m, double d_m) {
  if (k_abs_per_m < 0.0)
    throw std::invalid_argument("absorption coefficient must be >= 0");
  return 10.0 * std::log10(std::exp(1.0)) * k_abs_per_m * d_m;
}

double rayleigh_distance_m(std::size_t n_max, double delta_r_m, double delta_t_m,
                           double lambda_m) {
  if (n_max == 0 || delta_r_m <= 0.0 || delta_t_m <= 0.0 || lambda_m <= 0.0)
    throw std::invalid_argument("array parameters must be positive");
  return static_cast<double>(n_max) * delta_r_m * delta_t_m / lambda_m;
}

double rayleigh_distance_m(const ArrayConfig& cfg) {
  return rayleigh_distance_m(cfg.antennas_per_side(), cfg.delta_r_m, cfg.delta_t_m,
                             wavelength_m(cfg.fc_hz));
}

double optimal_separation_m(double range_m, std::size_t n_max, double lambda_m) {
  if (range_m <= 0.0 || n_max == 0 || lambda_m <= 0.0)
    throw std::invalid_argument("range, count and wavelength must be positive");
  return std::sqrt(range_m * lambda_m / static_cast<double>(n_max));
}

ComplexMatrix los_channel(const ArrayConfig& cfg) {
  if (cfg.rows == 0 || cfg.cols == 0 || cfg.range_m <= 0.0)
    throw std::invalid_argument("invalid array geometry");
  const double lambda = wavelength_m(cfg.fc_hz);
  const std::size_t n = cfg.antennas_per_side();

  auto element_xy = [&](std::size_t idx, double delta, double& x, double& y) {
    const std::size_t r = idx / cfg.cols;
    const std::size_t c = idx % cfg.cols;
    x = (static_cast<double>(c) - 0.5 * static_cast<double>(cfg.cols - 1)) * delta;
    y = (static_cast<double>(r) - 0.5 * static_cast<double>(cfg.rows - 1)) * delta;
  };

  ComplexMatrix h(n, n);
  for (std::size_t tx = 0; tx < n; ++tx) {
    double txx, txy;
    element_xy(tx, cfg.delta_t_m, txx, txy);
    for (std::size_t rx = 0; rx < n; ++rx) {
      double rxx, rxy;
      element_xy(rx, cfg.delta_r_m, rxx, rxy);
      const double dx = rxx - txx;
      const double dy = rxy - txy;
      const double d = std::sqrt(dx * dx + dy * dy + cfg.range_m * cfg.range_m);
      const double amp = lambda / (4.0 * kPi * d);
      h.at(rx, tx) = std::polar(amp, -kTwoPi * d / lambda);
    }
  }
  return h;
}

std::vector<BerPoint> multiplex_ber(const ArrayConfig& cfg,
                                    std::span<const double> snr_grid_db,
                                    std::size_t n_channel_uses, RngStream rng,
                                    double beamforming_gain_db) {
  const ComplexMatrix h = los_channel(cfg);
  const std::vector<double> sv = singular_values(h);
  const std::size_t n_streams = sv.size();

  double mean_sq = 0.0;
  for (double s : sv) mean_sq += s * s;
  mean_sq /= static_cast<double>(n_streams);

  // SVD precoding/combining diagonalizes the channel exactly, so each
  // eigenchannel is a scalar AWGN link with its own gain.
  const pqam::Constellation qam = pqam::make_square_qam(16);
  const std::size_t bits_per_symbol = qam.bits_per_symbol;

  std::vector<BerPoint> out;
  out.reserve(snr_grid_db.size());
  for (std::size_t gi = 0; gi < snr_grid_db.size(); ++gi) {
    // Matched seeds across the grid: every SNR point replays the same draws.
    RngStream stream = rng.substream(0);
    const double grid_lin = db_to_lin(snr_grid_db[gi] + beamforming_gain_db);
    std::uint64_t bit_errors = 0;
    for (std::size_t use = 0; use < n_channel_uses; ++use) {
      for (std::size_t s = 0; s < n_streams; ++s) {
        const double snr = grid_lin * sv[s] * sv[s] / mean_sq;
        const double sigma = snr > 0.0 ? std::sqrt(1.0 / snr) : 1e300;
        const std::size_t tx = stream.uniform_int(qam.points.size());
        const std::complex<double> y = qam.points[tx] + sigma * stream.cnormal();
        const std::size_t rx = pqam::detect_euclidean(y, qam);
        bit_errors += static_cast<std::uint64_t>(
            __builtin_popcount(qam.bit_labels[tx] ^ qam.bit_labels[rx]));
      }
    }
    BerPoint pt;
    pt.snr_db = snr_grid_db[gi];
    pt.bits = n_channel_uses * n_streams * bits_per_symbol;
    pt.bit_errors = bit_errors;
    pt.ber = static_cast<double>(bit_errors) / static_cast<double>(pt.bits);
    const WilsonCI ci = wilson_interval(bit_errors, pt.bits);
    pt.ci_lo = ci.lo;
    pt.ci_hi = ci.hi;
    out.push_back(pt);
  }
  return out;
}

} // namespace tbench::thz
