// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tbench/geometry.hpp"
#include "tbench/propagation.hpp"
#include "tbench/rng.hpp"

namespace tbench::iab {

// Sectored beam: G0 inside the half-power beamwidth (closed interval),
// side-lobe gain outside.
struct AntennaPattern {
  double g0_dbi = 18.0;
  double g_side_dbi = -2.0;
  double theta_hpbw_rad = 0.5235987755982988; // 30 degrees
};

double antenna_gain_lin(double phi_rad, const AntennaPattern& pattern);

// Two-tier HetNet with in-band wireless backhaul. Macro stations are always
// fiber-connected; small stations are fiber-connected with probability
// fiber_fraction, otherwise wirelessly backhauled by their best macro.
struct HetNetConfig {
  double mbs_density_km2 = 5.0;   // phi_M
  double sbs_density_km2 = 60.0;  // phi_S
  double ue_density_km2 = 150.0;  // phi_U
  double fiber_fraction = 0.0;
  double blockage_density_km2 = 200.0; // lambda_B (not stated by the study; required input)
  double wall_length_m = 5.0;
  double bandwidth_hz = 1e9;
  double p_mbs_dbm = 40.0;
  double p_sbs_dbm = 24.0;
  double p_ue_dbm = 0.0;
  AntennaPattern bs_antenna;
  double ue_gain_dbi = 0.0; // omnidirectional terminals
  CloseInParams closein{2.0, 3.0, 28.0};
  NoiseSpec noise{-174.0, 1e9, 9.0};
  double rate_threshold_bps = 100e6;
  Region region{1000.0, false};
  // Cell-selection bias towards the dense tier, applied when ranking
  // candidate stations (0 dB recovers the plain max-power rule). In-band
  // backhaul wants the macro layer kept free for feeding small cells.
  double sbs_selection_bias_db = 10.0;
};

// Average (fading-free) received power; blockage decides the exponent.
double avg_received_power_w(Point2D tx, Point2D rx, double p_tx_w,
                            double tx_gain_lin, double rx_gain_lin,
                            const BlockageField& field, const CloseInParams& closein);

// One fading realization on top of the average (|h|^2 ~ Exp(1)).
double received_power_w(Point2D tx, Point2D rx, double p_tx_w, double tx_gain_lin,
                        double rx_gain_lin, const BlockageField& field,
                        const CloseInParams& closein, RngStream& rng);

struct ServingNode {
  bool is_mbs = false;
  std::size_t index = 0; // into the respective tier's position list
};

// Open access, maximum average received power; ties break to the nearest node.
ServingNode associate(Point2D ue, const std::vector<Point2D>& mbs,
                      const std::vector<Point2D>& sbs, const BlockageField& field,
                      const HetNetConfig& cfg);

struct BandwidthSplit {
  double access_hz = 0.0;
  double backhaul_hz = 0.0;
};

// Load-proportional split of a station's band between access and backhaul.
// Demand is measured in UE-equivalents; fiber-connected stations give the
// whole band to access.
BandwidthSplit split_bandwidth(std::size_t access_ues, double backhaul_demand,
                               double bandwidth_hz, bool fiber_connected);

struct CoverageResult {
  double coverage = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t covered = 0;
  std::uint64_t total_ues = 0;
};

// Fraction of UEs whose end-to-end rate (access, and the backhaul share for
// wirelessly backhauled small cells) meets the threshold. Access links see
// interference from every active station; backhaul links are noise-limited.
CoverageResult coverage_probability(const HetNetConfig& cfg, std::size_t n_drops,
                                    RngStream rng);

// Same campaign evaluated against several thresholds at once (the per-UE
// rates are computed a single time).
std::vector<CoverageResult> coverage_probability(const HetNetConfig& cfg,
                                                 std::size_t n_drops, RngStream rng,
                                                 std::span<const double> thresholds_bps);

// Smallest SBS density at which the configured network reaches the target
// coverage, by bisection. Throws tbench::numerical_error when the bracket
// cannot reach the target.
double equivalent_density(const HetNetConfig& cfg, double target_coverage,
                          std::size_t n_drops, RngStream rng,
                          double density_lo_km2 = 5.0, double density_hi_km2 = 300.0);

} // namespace tbench::iab
