// SPDX-License-Identifier: Apache-2.0
#include "tbench/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "tbench/units.hpp"

namespace tbench {

double noise_power_dbm(const NoiseSpec& spec) {
  if (spec.bandwidth_hz <= 0.0)
    throw std::invalid_argument("noise bandwidth must be positive");
  return spec.psd_dbm_hz + 10.0 * std::log10(spec.bandwidth_hz) + spec.noise_figure_db;
}

double noise_power_watts(const NoiseSpec& spec) {
  return dbm_to_watts(noise_power_dbm(spec));
}

double closein_pathloss_db(double r_m, const CloseInParams& params, bool los) {
  if (r_m < 1.0)
    throw std::invalid_argument("close-in model is anchored at 1 m; r must be >= 1 m");
  const double alpha = los ? params.alpha_los : params.alpha_nlos;
  return 32.4 + 10.0 * alpha * std::log10(r_m) + 20.0 * std::log10(params.fc_ghz);
}

std::vector<FadingDraw> rayleigh_draw(RngStream& rng, std::size_t n) {
  std::vector<FadingDraw> h;
  h.reserve(n);
  for (std::size_t i = 0; i < n; ++i) h.push_back(rng.cnormal());
  return h;
}

double three_slope_gain_db(double d3_m, const ThreeSlopeParams& p) {
  if (d3_m <= 0.0) throw std::invalid_argument("distance must be positive");
  const double lf = std::log10(p.fc_mhz);
  // COST-Hata anchor (distance term handled by the slopes below, d in km).
  const double anchor_db = 46.3 + 33.9 * lf - 13.82 * std::log10(p.h_ap_m) -
                           (1.1 * lf - 0.7) * p.h_ue_m + (1.56 * lf - 0.8);
  const double d_km = d3_m / 1000.0;
  const double d0_km = p.d0_m / 1000.0;
  const double d1_km = p.d1_m / 1000.0;
  double gain_db;
  if (d3_m > p.d1_m) {
    gain_db = -anchor_db - 35.0 * std::log10(d_km);
  } else if (d3_m > p.d0_m) {
    gain_db = -anchor_db - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d_km);
  } else {
    gain_db = -anchor_db - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d0_km);
  }
  return gain_db;
}

double cellfree_beta(double d3_m, const ThreeSlopeParams& p, RngStream& rng) {
  double gain_db = three_slope_gain_db(d3_m, p);
  if (p.shadowing && d3_m > p.d1_m) gain_db += p.shadow_sigma_db * rng.normal();
  return db_to_lin(gain_db);
}

} // namespace tbench
