// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tbench/rng.hpp"

namespace tbench {

struct NoiseSpec {
  double psd_dbm_hz = -174.0; // thermal noise floor
  double bandwidth_hz = 0.0;
  double noise_figure_db = 0.0;
};

double noise_power_dbm(const NoiseSpec& spec);
double noise_power_watts(const NoiseSpec& spec);

// Close-in reference-distance path loss, 1 m anchor:
//   PL = 32.4 + 10*alpha*log10(r / 1 m) + 20*log10(fc / 1 GHz)  [dB]
// The LoS/NLoS flag selects the exponent.
struct CloseInParams {
  double alpha_los = 2.0;
  double alpha_nlos = 3.0;
  double fc_ghz = 28.0;
};

double closein_pathloss_db(double r_m, const CloseInParams& params, bool los);

// One small-scale fading coefficient; unit mean power over the ensemble.
using FadingDraw = std::complex<double>;

// i.i.d. CN(0,1) fading draws.
std::vector<FadingDraw> rayleigh_draw(RngStream& rng, std::size_t n);

// Three-slope large-scale fading model used by the cell-free study:
// COST-Hata anchor loss, slope breaks at d0/d1, far exponent 3.5, and
// log-normal shadowing beyond d1. Distances are 3D (antenna heights apply).
struct ThreeSlopeParams {
  double fc_mhz = 1900.0;
  double h_ap_m = 10.0;
  double h_ue_m = 1.65;
  double d0_m = 10.0;
  double d1_m = 50.0;
  double shadow_sigma_db = 8.0;
  bool shadowing = true;

  // Identifier echoed in output metadata so downstream consumers know which
  // large-scale model produced the gains.
  static constexpr const char* kModelId = "three-slope-cost-hata-8db-shadowing";
};

// Deterministic part, in dB (negative value = loss).
double three_slope_gain_db(double d3_m, const ThreeSlopeParams& params);

// Linear large-scale gain beta at 3D distance d3_m, including the shadowing
// draw when enabled (one normal consumed per call in that case).
double cellfree_beta(double d3_m, const ThreeSlopeParams& params, RngStream& rng);

} // namespace tbench
