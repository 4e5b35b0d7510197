// SPDX-License-Identifier: Apache-2.0
#include "tbench/cellfree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tbench/stats.hpp"
#include "tbench/units.hpp"

namespace tbench::cellfree {

std::vector<int> assign_pilots(std::size_t n_ue, std::size_t tau_p, RngStream& rng) {
  if (tau_p < 1) throw std::invalid_argument("tau_p must be >= 1");
  std::vector<std::size_t> order(n_ue);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with the stream's own integer draws.
  for (std::size_t i = n_ue; i > 1; --i) {
    const std::size_t j = rng.uniform_int(i);
    std::swap(order[i - 1], order[j]);
  }
  std::vector<int> pilot_of(n_ue, 0);
  for (std::size_t pos = 0; pos < n_ue; ++pos)
    pilot_of[order[pos]] = static_cast<int>(pos % tau_p);
  return pilot_of;
}

std::vector<std::vector<std::size_t>> pilot_sharers(std::span<const int> pilot_of) {
  const std::size_t n_ue = pilot_of.size();
  std::vector<std::vector<std::size_t>> sharers(n_ue);
  for (std::size_t k = 0; k < n_ue; ++k)
    for (std::size_t j = 0; j < n_ue; ++j)
      if (pilot_of[j] == pilot_of[k]) sharers[k].push_back(j);
  return sharers;
}

std::vector<std::vector<double>> estimate_quality(
    const std::vector<std::vector<double>>& beta,
    const std::vector<std::vector<std::size_t>>& sharers,
    std::span<const double> eta_pilot, double sigma2) {
  const std::size_t n_ue = beta.size();
  std::vector<std::vector<double>> gamma(n_ue);
  for (std::size_t k = 0; k < n_ue; ++k) {
    const std::size_t n_ap = beta[k].size();
    gamma[k].resize(n_ap);
    for (std::size_t m = 0; m < n_ap; ++m) {
      double den = sigma2;
      for (std::size_t i : sharers[k]) den += eta_pilot[i] * beta[i][m];
      gamma[k][m] = eta_pilot[k] * beta[k][m] * beta[k][m] / den;
    }
  }
  return gamma;
}

AssociationSets associate(const std::vector<std::vector<double>>& beta,
                          Association mode, std::size_t n_uc) {
  const std::size_t n_ue = beta.size();
  const std::size_t n_ap = n_ue ? beta[0].size() : 0;
  AssociationSets sets;
  sets.serving_aps.resize(n_ue);
  sets.served_ues.resize(n_ap);

  for (std::size_t k = 0; k < n_ue; ++k) {
    switch (mode) {
      case Association::fcf: {
        sets.serving_aps[k].resize(n_ap);
        std::iota(sets.serving_aps[k].begin(), sets.serving_aps[k].end(), 0);
        break;
      }
      case Association::user_centric: {
        if (n_uc > n_ap) throw std::invalid_argument("n_uc cannot exceed the AP count");
        std::vector<std::size_t> order(n_ap);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          return beta[k][a] > beta[k][b];
        });
        order.resize(n_uc);
        std::sort(order.begin(), order.end());
        sets.serving_aps[k] = std::move(order);
        break;
      }
      case Association::mmimo: {
        const auto best = static_cast<std::size_t>(std::distance(
            beta[k].begin(), std::max_element(beta[k].begin(), beta[k].end())));
        sets.serving_aps[k] = {best};
        break;
      }
    }
    for (std::size_t m : sets.serving_aps[k]) sets.served_ues[m].push_back(k);
  }
  return sets;
}

std::vector<std::vector<double>> allocate_dl(
    const std::vector<std::vector<double>>& gamma, const AssociationSets& sets,
    DlPowerRule rule, double alpha_dl, double p_max_w) {
  const std::size_t n_ue = gamma.size();
  const std::size_t n_ap = sets.served_ues.size();
  std::vector<std::vector<double>> eta(n_ue, std::vector<double>(n_ap, 0.0));

  for (std::size_t m = 0; m < n_ap; ++m) {
    const auto& ues = sets.served_ues[m];
    if (ues.empty()) continue; // unloaded AP transmits nothing

    if (rule == DlPowerRule::upa) {
      const double share = p_max_w / static_cast<double>(ues.size());
      for (std::size_t k : ues) eta[k][m] = share;
    } else if (rule == DlPowerRule::ppa) {
      // Power proportional to the estimate quality.
      double sum = 0.0;
      for (std::size_t k : ues) sum += gamma[k][m];
      for (std::size_t k : ues) eta[k][m] = gamma[k][m] * p_max_w / sum;
    } else {
      // Fractional rule: power proportional to gamma^(-alpha).
      double norm = 0.0;
      for (std::size_t k : ues) norm += std::pow(gamma[k][m], -alpha_dl);
      for (std::size_t k : ues)
        eta[k][m] = std::pow(gamma[k][m], -alpha_dl) * p_max_w / norm;
    }

    // The rules above exhaust the budget exactly; renormalize only if
    // rounding pushed past it.
    double spent = 0.0;
    for (std::size_t k : ues) spent += eta[k][m];
    if (spent > p_max_w) {
      const double scale = p_max_w / spent;
      for (std::size_t k : ues) eta[k][m] *= scale;
    }
  }
  return eta;
}

std::vector<double> allocate_ul(const std::vector<std::vector<double>>& gamma,
                                const AssociationSets& sets, UlPowerRule rule,
                                double p_max_w, double p0_w, double alpha_ul) {
  const std::size_t n_ue = gamma.size();
  std::vector<double> eta(n_ue, p_max_w);
  if (rule == UlPowerRule::upa) return eta;
  for (std::size_t k = 0; k < n_ue; ++k) {
    double sum = 0.0;
    for (std::size_t m : sets.serving_aps[k]) sum += gamma[k][m];
    const double gbar = std::sqrt(sum);
    if (gbar <= 0.0) throw std::invalid_argument("FPA-UL requires positive gamma");
    eta[k] = std::min(p_max_w, p0_w * std::pow(gbar, -alpha_ul));
  }
  return eta;
}

double dl_rate_bps(std::size_t k, const DropState& drop, const CellFreeConfig& cfg) {
  const double n_ant = static_cast<double>(drop.n_ant_per_ap);
  const double sigma2_z = noise_power_watts(cfg.noise);

  double coh = 0.0;
  for (std::size_t m : drop.serving_aps[k])
    coh += std::sqrt(drop.eta_dl[k][m] * drop.gamma[k][m]);
  const double num = n_ant * coh * coh;

  double den = sigma2_z;
  const std::size_t n_ue = drop.beta.size();
  for (std::size_t j = 0; j < n_ue; ++j)
    for (std::size_t m : drop.serving_aps[j])
      den += drop.eta_dl[j][m] * drop.beta[k][m];
  for (std::size_t j : drop.pilot_sharers[k]) {
    if (j == k) continue;
    double s = 0.0;
    for (std::size_t m : drop.serving_aps[j])
      s += std::sqrt(drop.eta_dl[j][m] * drop.gamma[k][m]);
    den += n_ant * s * s;
  }
  return cfg.bandwidth_hz * (cfg.tau_d() / cfg.tau_c) * std::log2(1.0 + num / den);
}

double ul_rate_bps(std::size_t k, const DropState& drop, const CellFreeConfig& cfg) {
  const double n_ant = static_cast<double>(drop.n_ant_per_ap);
  const double sigma2_w = noise_power_watts(cfg.noise);

  double gsum = 0.0;
  for (std::size_t m : drop.serving_aps[k]) gsum += drop.gamma[k][m];
  const double num = drop.eta_ul[k] * n_ant * gsum * gsum;

  double den = 0.0;
  const std::size_t n_ue = drop.beta.size();
  for (std::size_t j = 0; j < n_ue; ++j) {
    double s = 0.0;
    for (std::size_t m : drop.serving_aps[k]) s += drop.beta[j][m] * drop.gamma[k][m];
    den += drop.eta_ul[j] * s;
  }
  for (std::size_t j : drop.pilot_sharers[k]) {
    if (j == k) continue;
    const double train_ratio = std::sqrt(drop.eta_pilot[j] / drop.eta_pilot[k]);
    double s = 0.0;
    for (std::size_t m : drop.serving_aps[k])
      s += drop.gamma[k][m] * train_ratio * drop.beta[j][m] / drop.beta[k][m];
    den += n_ant * drop.eta_ul[j] * s * s;
  }
  for (std::size_t m : drop.serving_aps[k]) den += sigma2_w * drop.gamma[k][m];

  return cfg.bandwidth_hz * (cfg.tau_u() / cfg.tau_c) * std::log2(1.0 + num / den);
}

namespace {

std::vector<Point2D> ap_positions(const CellFreeConfig& cfg, RngStream& rng) {
  if (cfg.association == Association::mmimo) {
    // Fixed uniform grid of co-located sites.
    const std::size_t n = cfg.mmimo.n_sites;
    const auto per_side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::vector<Point2D> pos;
    pos.reserve(n);
    const double cell = cfg.region.side_m / static_cast<double>(per_side);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = i / per_side;
      const std::size_t c = i % per_side;
      pos.push_back({(static_cast<double>(c) + 0.5) * cell,
                     (static_cast<double>(r) + 0.5) * cell});
    }
    return pos;
  }
  std::vector<Point2D> pos;
  pos.reserve(cfg.n_ap);
  for (std::size_t m = 0; m < cfg.n_ap; ++m)
    pos.push_back({rng.uniform(0.0, cfg.region.side_m), rng.uniform(0.0, cfg.region.side_m)});
  return pos;
}

} // namespace

DropState build_drop(const CellFreeConfig& cfg, RngStream& rng) {
  DropState drop;
  const bool mmimo = cfg.association == Association::mmimo;
  drop.n_ap = mmimo ? cfg.mmimo.n_sites : cfg.n_ap;
  drop.n_ant_per_ap = mmimo ? cfg.mmimo.antennas_per_site : cfg.n_ant_per_ap;

  const std::vector<Point2D> aps = ap_positions(cfg, rng);
  std::vector<Point2D> ues;
  ues.reserve(cfg.n_ue);
  for (std::size_t k = 0; k < cfg.n_ue; ++k)
    ues.push_back({rng.uniform(0.0, cfg.region.side_m), rng.uniform(0.0, cfg.region.side_m)});

  const double dh = cfg.pathloss.h_ap_m - cfg.pathloss.h_ue_m;
  drop.beta.assign(cfg.n_ue, std::vector<double>(drop.n_ap, 0.0));
  for (std::size_t k = 0; k < cfg.n_ue; ++k)
    for (std::size_t m = 0; m < drop.n_ap; ++m) {
      const double d2 = wrap_distance(ues[k], aps[m], cfg.region);
      const double d3 = std::hypot(d2, dh);
      drop.beta[k][m] = cellfree_beta(d3, cfg.pathloss, rng);
    }

  drop.pilot_of = assign_pilots(cfg.n_ue, static_cast<std::size_t>(cfg.tau_p), rng);
  drop.pilot_sharers = pilot_sharers(drop.pilot_of);
  drop.eta_pilot.assign(cfg.n_ue, cfg.pilot_energy());

  const double sigma2 = noise_power_watts(cfg.noise);
  drop.gamma = estimate_quality(drop.beta, drop.pilot_sharers, drop.eta_pilot, sigma2);

  AssociationSets sets = associate(drop.beta, cfg.association, cfg.n_uc);
  drop.serving_aps = std::move(sets.serving_aps);
  drop.served_ues = std::move(sets.served_ues);

  AssociationSets view;
  view.serving_aps = drop.serving_aps;
  view.served_ues = drop.served_ues;
  const double p_dl = mmimo ? cfg.mmimo.p_max_site_dl_w : cfg.p_max_ap_dl_w;
  drop.eta_dl = allocate_dl(drop.gamma, view, cfg.dl_rule, cfg.alpha_dl, p_dl);
  drop.eta_ul = allocate_ul(drop.gamma, view, cfg.ul_rule, cfg.p_max_ul_w,
                            cfg.p0_ul_w, cfg.alpha_ul);
  return drop;
}

CampaignResult run_campaign(const CellFreeConfig& cfg, std::size_t n_drops,
                            RngStream rng) {
  if (n_drops < 1) throw std::invalid_argument("n_drops must be >= 1");
  CampaignResult res;
  res.dl.samples_bps.reserve(n_drops * cfg.n_ue);
  res.ul.samples_bps.reserve(n_drops * cfg.n_ue);
  for (std::size_t d = 0; d < n_drops; ++d) {
    RngStream drop_rng = rng.substream(d);
    const DropState drop = build_drop(cfg, drop_rng);
    for (std::size_t k = 0; k < cfg.n_ue; ++k) {
      res.dl.samples_bps.push_back(dl_rate_bps(k, drop, cfg));
      res.ul.samples_bps.push_back(ul_rate_bps(k, drop, cfg));
      res.drop_index.push_back(static_cast<std::uint32_t>(d));
      res.ue_index.push_back(static_cast<std::uint32_t>(k));
    }
  }
  const double levels[] = {1.0, 5.0, 50.0, 90.0};
  res.dl.percentiles_bps = percentiles(res.dl.samples_bps, levels);
  res.ul.percentiles_bps = percentiles(res.ul.samples_bps, levels);
  return res;
}

} // namespace tbench::cellfree
