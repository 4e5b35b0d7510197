// SPDX-License-Identifier: Apache-2.0
#include "tbench/irs.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "tbench/units.hpp"

namespace tbench {

namespace {

void check_cfg(const IrsLinkConfig& cfg) {
  if (cfg.beta_d <= 0.0 || (cfg.n_elements > 0 && cfg.beta_irs <= 0.0))
    throw std::invalid_argument("channel gains must be positive");
  if (cfg.psi_tx_rad.size() != cfg.n_elements ||
      cfg.psi_rx_rad.size() != cfg.n_elements)
    throw std::invalid_argument("per-element phase lists must have n_elements entries");
}

} // namespace

double composite_gain(const IrsLinkConfig& cfg, const IrsPhaseConfig& phases) {
  check_cfg(cfg);
  if (phases.phi_rad.size() != cfg.n_elements)
    throw std::invalid_argument("phase config length must equal n_elements");
  const double amp_d = std::sqrt(cfg.beta_d);
  const double amp_s = cfg.n_elements > 0 ? std::sqrt(cfg.beta_irs) : 0.0;
  std::complex<double> h = std::polar(amp_d, cfg.psi_d_rad);
  for (std::size_t n = 0; n < cfg.n_elements; ++n) {
    const double phase = cfg.psi_tx_rad[n] + cfg.psi_rx_rad[n] - phases.phi_rad[n];
    h += std::polar(amp_s, phase);
  }
  return std::norm(h);
}

IrsPhaseConfig optimal_phases(const IrsLinkConfig& cfg) {
  check_cfg(cfg);
  IrsPhaseConfig out;
  out.phi_rad.reserve(cfg.n_elements);
  for (std::size_t n = 0; n < cfg.n_elements; ++n)
    out.phi_rad.push_back(
        wrap_2pi(cfg.psi_tx_rad[n] + cfg.psi_rx_rad[n] - cfg.psi_d_rad));
  return out;
}

double optimal_gain_bound(const IrsLinkConfig& cfg) {
  const double n = static_cast<double>(cfg.n_elements);
  const double amp = std::sqrt(cfg.beta_d) + n * std::sqrt(cfg.beta_irs);
  return amp * amp;
}

double spectral_efficiency(const IrsLinkConfig& cfg, const IrsPhaseConfig& phases) {
  if (cfg.noise_w <= 0.0) throw std::invalid_argument("noise power must be positive");
  const double snr = cfg.tx_power_w * composite_gain(cfg, phases) / cfg.noise_w;
  return std::log2(1.0 + snr);
}

double irs_element_gain(double d1_m, double d2_m, double lambda_m) {
  if (d1_m <= 0.0 || d2_m <= 0.0 || lambda_m <= 0.0)
    throw std::invalid_argument("distances and wavelength must be positive");
  const double area = (lambda_m / 4.0) * (lambda_m / 4.0);
  const double four_pi = 4.0 * kPi;
  return (area * area) / (four_pi * four_pi * d1_m * d1_m * d2_m * d2_m);
}

std::vector<IrsSweepPoint> deployment_sweep(Point2D tx, Point2D rx,
                                            std::span<const Point2D> track,
                                            std::size_t n_elements,
                                            double lambda_m, double beta_d,
                                            double tx_power_w, double noise_w) {
  std::vector<IrsSweepPoint> out;
  out.reserve(track.size());
  const Region unwrapped; // Euclidean distances
  double arclength = 0.0;
  for (std::size_t i = 0; i < track.size(); ++i) {
    if (i > 0) arclength += wrap_distance(track[i - 1], track[i], unwrapped);
    const double d1 = wrap_distance(tx, track[i], unwrapped);
    const double d2 = wrap_distance(track[i], rx, unwrapped);
    if (d1 <= 0.0 || d2 <= 0.0)
      throw std::invalid_argument("track positions must be distinct from endpoints");
    IrsSweepPoint pt;
    pt.position_m = arclength;
    pt.beta_irs = irs_element_gain(d1, d2, lambda_m);
    const double amp =
        std::sqrt(beta_d) + static_cast<double>(n_elements) * std::sqrt(pt.beta_irs);
    pt.gain = amp * amp;
    pt.se_bps_hz = std::log2(1.0 + tx_power_w * pt.gain / noise_w);
    out.push_back(pt);
  }
  return out;
}

} // namespace tbench
