// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tbench/geometry.hpp"

namespace tbench {

// Single-antenna link assisted by an N-element reflecting surface. The
// composite channel is the direct path plus N scattered paths, each with a
// controllable phase delay.
struct IrsLinkConfig {
  double beta_d = 0.0;  // direct-path gain, linear
  double psi_d_rad = 0.0;
  std::size_t n_elements = 0;
  double beta_irs = 0.0; // per-element end-to-end gain, linear
  std::vector<double> psi_tx_rad; // per element, size n_elements
  std::vector<double> psi_rx_rad;
  double tx_power_w = 0.01;
  double noise_w = 0.0;
};

struct IrsPhaseConfig {
  std::vector<double> phi_rad;
};

// |sqrt(beta_d) e^{j psi_d} + sum_n sqrt(beta_irs) e^{j(psi_tx + psi_rx - phi)}|^2
double composite_gain(const IrsLinkConfig& cfg, const IrsPhaseConfig& phases);

// phi_n = psi_tx_n + psi_rx_n - psi_d (mod 2*pi): every scattered path is
// co-phased with the direct path, achieving (sqrt(beta_d) + N sqrt(beta_irs))^2.
IrsPhaseConfig optimal_phases(const IrsLinkConfig& cfg);

double optimal_gain_bound(const IrsLinkConfig& cfg);

// log2(1 + P * gain / noise)
double spectral_efficiency(const IrsLinkConfig& cfg, const IrsPhaseConfig& phases);

struct IrsSweepPoint {
  double position_m = 0.0;  // arclength along the deployment track
  double beta_irs = 0.0;    // per-element gain at this position, linear
  double gain = 0.0;        // end-to-end gain under optimal phases, linear
  double se_bps_hz = 0.0;
};

// Per-element far-field reflected gain: beta = A^2 / ((4 pi)^2 d1^2 d2^2)
// with element area A = (lambda/4)^2, boresight incidence.
double irs_element_gain(double d1_m, double d2_m, double lambda_m);

// Evaluates the optimally-phased end-to-end gain for a surface deployed at
// each candidate position along a track between transmitter and receiver.
std::vector<IrsSweepPoint> deployment_sweep(Point2D tx, Point2D rx,
                                            std::span<const Point2D> track,
                                            std::size_t n_elements,
                                            double lambda_m, double beta_d,
                                            double tx_power_w, double noise_w);

} // namespace tbench
