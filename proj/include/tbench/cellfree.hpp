// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "tbench/geometry.hpp"
#include "tbench/propagation.hpp"
#include "tbench/rng.hpp"

namespace tbench::cellfree {

enum class Association {
  fcf,          // every AP serves every UE
  user_centric, // each UE served by its best n_uc APs (by beta)
  mmimo,        // single best co-located site per UE
};

enum class DlPowerRule { ppa, fpa, upa };
enum class UlPowerRule { upa, fpa };

// Cellular massive MIMO baseline: a few co-located sites on a fixed grid.
struct MmimoLayout {
  std::size_t n_sites = 4;
  std::size_t antennas_per_site = 100;
  double p_max_site_dl_w = 5.0;
};

struct CellFreeConfig {
  std::size_t n_ap = 100;        // M
  std::size_t n_ant_per_ap = 4;  // N_AP
  std::size_t n_ue = 30;         // K
  Region region{1000.0, true};

  double tau_c = 200.0;
  double tau_p = 16.0; // pilot count == pilot length
  double bandwidth_hz = 20e6;

  double pilot_power_w = 0.1;  // p_k; training energy eta_k = tau_p * p_k
  double p_max_ap_dl_w = 0.2;
  double p_max_ul_w = 0.1;

  Association association = Association::fcf;
  std::size_t n_uc = 10;
  MmimoLayout mmimo;

  DlPowerRule dl_rule = DlPowerRule::ppa;
  double alpha_dl = -0.5;
  UlPowerRule ul_rule = UlPowerRule::upa;
  double p0_ul_w = 1e-4; // -10 dBm
  double alpha_ul = 0.5;

  NoiseSpec noise{-174.0, 20e6, 9.0};
  ThreeSlopeParams pathloss{};

  // The estimate-quality denominator uses the UE-side noise power; switch
  // to AP-side noise if desired (both default to the same value here since
  // the noise figures match).
  bool gamma_uses_ue_noise = true;

  double tau_d() const { return (tau_c - tau_p) / 2.0; }
  double tau_u() const { return (tau_c - tau_p) / 2.0; }
  double pilot_energy() const { return tau_p * pilot_power_w; }
};

// One network realization with everything the rate bounds need.
struct DropState {
  std::size_t n_ap = 0;          // effective AP/site count for this drop
  std::size_t n_ant_per_ap = 0;  // effective antennas per AP
  std::vector<std::vector<double>> beta;   // [ue][ap] linear
  std::vector<std::vector<double>> gamma;  // [ue][ap] linear
  std::vector<int> pilot_of;               // [ue]
  std::vector<std::vector<std::size_t>> pilot_sharers; // P_k, includes k
  std::vector<std::vector<std::size_t>> serving_aps;   // M_k, ascending
  std::vector<std::vector<std::size_t>> served_ues;    // K_m, ascending
  std::vector<std::vector<double>> eta_dl; // [ue][ap] watts, 0 if ap not in M_k
  std::vector<double> eta_ul;              // [ue] watts
  std::vector<double> eta_pilot;           // [ue] training energy
};

// Balanced round-robin pilot assignment over a randomly shuffled UE order:
// contamination is capped at ceil(K / tau_p) sharers per pilot.
std::vector<int> assign_pilots(std::size_t n_ue, std::size_t tau_p, RngStream& rng);

std::vector<std::vector<std::size_t>> pilot_sharers(std::span<const int> pilot_of);

// gamma_{k,m} = eta_k beta_{k,m}^2 / (sum_{i in P_k} eta_i beta_{i,m} + sigma2)
std::vector<std::vector<double>> estimate_quality(
    const std::vector<std::vector<double>>& beta,
    const std::vector<std::vector<std::size_t>>& sharers,
    std::span<const double> eta_pilot, double sigma2_w);

struct AssociationSets {
  std::vector<std::vector<std::size_t>> serving_aps; // M_k
  std::vector<std::vector<std::size_t>> served_ues;  // K_m
};

AssociationSets associate(const std::vector<std::vector<double>>& beta,
                          Association mode, std::size_t n_uc);

// Downlink powers, in radiated watts per (UE, AP) pair. eta enters the rate
// bounds directly under the unit-norm precoder convention, so every rule
// exhausts the per-AP budget with equality: sum_{k in K_m} eta_{k,m} = p_max.
//   PPA: eta proportional to gamma          (eta = gamma p / sum gamma)
//   FPA: eta proportional to gamma^-alpha   (alpha_dl = -0.5 by default)
//   UPA: equal split across the served set  (the co-located-site rule)
std::vector<std::vector<double>> allocate_dl(
    const std::vector<std::vector<double>>& gamma,
    const AssociationSets& sets, DlPowerRule rule, double alpha_dl,
    double p_max_w);

// Uplink powers. UPA: p_max for everyone. FPA: min(p_max, p0 * gbar^-alpha)
// with gbar_k = sqrt(sum_{m in M_k} gamma_{k,m}).
std::vector<double> allocate_ul(const std::vector<std::vector<double>>& gamma,
                                const AssociationSets& sets, UlPowerRule rule,
                                double p_max_w, double p0_w, double alpha_ul);

// Coherent downlink rate lower bound for UE k (use-and-then-forget).
double dl_rate_bps(std::size_t k, const DropState& drop, const CellFreeConfig& cfg);

// Uplink counterpart.
double ul_rate_bps(std::size_t k, const DropState& drop, const CellFreeConfig& cfg);

// Builds one full network realization (geometry, fading, pilots, estimates,
// association, power allocation) from the drop's own stream.
DropState build_drop(const CellFreeConfig& cfg, RngStream& rng);

struct RateStats {
  std::vector<double> samples_bps;
  std::map<double, double> percentiles_bps; // levels {1, 5, 50, 90}
};

struct CampaignResult {
  RateStats dl;
  RateStats ul;
  // Flat per-sample records for CSV emission: (drop, ue, dl_bps, ul_bps).
  std::vector<std::uint32_t> drop_index;
  std::vector<std::uint32_t> ue_index;
};

CampaignResult run_campaign(const CellFreeConfig& cfg, std::size_t n_drops,
                            RngStream rng);

} // namespace tbench::cellfree
