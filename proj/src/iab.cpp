// SPDX-License-Identifier: Apache-2.0
#include "tbench/iab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tbench/errors.hpp"
#include "tbench/stats.hpp"
#include "tbench/units.hpp"

namespace tbench::iab {

double antenna_gain_lin(double phi_rad, const AntennaPattern& pattern) {
  // remainder() keeps angles already in (-pi, pi] bit-exact, so the closed
  // interval at +-theta/2 behaves as written.
  const double phi = std::abs(std::remainder(phi_rad, kTwoPi));
  const double g_dbi =
      phi <= pattern.theta_hpbw_rad / 2.0 ? pattern.g0_dbi : pattern.g_side_dbi;
  return db_to_lin(g_dbi);
}

namespace {

double link_distance(Point2D a, Point2D b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double pathloss_lin(Point2D tx, Point2D rx, const BlockageField& field,
                    const CloseInParams& closein) {
  const double r = std::max(1.0, link_distance(tx, rx));
  const bool los = is_los(tx, rx, field);
  return db_to_lin(-closein_pathloss_db(r, closein, los));
}

} // namespace

double avg_received_power_w(Point2D tx, Point2D rx, double p_tx_w,
                            double tx_gain_lin, double rx_gain_lin,
                            const BlockageField& field, const CloseInParams& closein) {
  return p_tx_w * tx_gain_lin * rx_gain_lin * pathloss_lin(tx, rx, field, closein);
}

double received_power_w(Point2D tx, Point2D rx, double p_tx_w, double tx_gain_lin,
                        double rx_gain_lin, const BlockageField& field,
                        const CloseInParams& closein, RngStream& rng) {
  const double h2 = std::norm(rng.cnormal()); // Exp(1)
  return h2 * avg_received_power_w(tx, rx, p_tx_w, tx_gain_lin, rx_gain_lin, field, closein);
}

ServingNode associate(Point2D ue, const std::vector<Point2D>& mbs,
                      const std::vector<Point2D>& sbs, const BlockageField& field,
                      const HetNetConfig& cfg) {
  if (mbs.empty() && sbs.empty())
    throw std::invalid_argument("associate: no candidate stations");
  const double g_bs = db_to_lin(cfg.bs_antenna.g0_dbi); // serving beam aligned
  const double g_ue = db_to_lin(cfg.ue_gain_dbi);
  const double sbs_bias = db_to_lin(cfg.sbs_selection_bias_db);
  ServingNode best;
  double best_power = -1.0;
  double best_dist = 0.0;
  auto consider = [&](bool is_mbs, std::size_t idx, Point2D pos, double p_dbm) {
    const double bias = is_mbs ? 1.0 : sbs_bias;
    const double p = bias * avg_received_power_w(pos, ue, dbm_to_watts(p_dbm), g_bs,
                                                 g_ue, field, cfg.closein);
    const double d = link_distance(pos, ue);
    if (p > best_power || (p == best_power && d < best_dist)) {
      best_power = p;
      best_dist = d;
      best = {is_mbs, idx};
    }
  };
  for (std::size_t i = 0; i < mbs.size(); ++i) consider(true, i, mbs[i], cfg.p_mbs_dbm);
  for (std::size_t i = 0; i < sbs.size(); ++i) consider(false, i, sbs[i], cfg.p_sbs_dbm);
  return best;
}

BandwidthSplit split_bandwidth(std::size_t access_ues, double backhaul_demand,
                               double bandwidth_hz, bool fiber_connected) {
  if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth must be positive");
  if (backhaul_demand < 0.0) throw std::invalid_argument("demand must be >= 0");
  if (fiber_connected) return {bandwidth_hz, 0.0};
  const double load = static_cast<double>(access_ues);
  const double total = load + backhaul_demand;
  if (total <= 0.0) return {0.0, 0.0};
  return {bandwidth_hz * load / total, bandwidth_hz * backhaul_demand / total};
}

namespace {

struct Drop {
  std::vector<Point2D> mbs;
  std::vector<Point2D> sbs;
  std::vector<Point2D> ue;
  std::vector<bool> sbs_fiber;
  std::vector<int> sbs_parent; // backhaul MBS of a wireless SBS, -1 if none
  BlockageField field;
};

Drop build_drop(const HetNetConfig& cfg, RngStream& rng) {
  Drop d;
  d.mbs = sample_fhppp(cfg.mbs_density_km2, cfg.region, rng);
  d.sbs = sample_fhppp(cfg.sbs_density_km2, cfg.region, rng);
  d.ue = sample_fhppp(cfg.ue_density_km2, cfg.region, rng);
  d.field = sample_blockages(cfg.blockage_density_km2, cfg.wall_length_m,
                             cfg.region, rng);
  // One uniform per SBS couples fiber membership across fiber-fraction
  // sweeps run with matched seeds.
  d.sbs_fiber.resize(d.sbs.size());
  for (std::size_t s = 0; s < d.sbs.size(); ++s)
    d.sbs_fiber[s] = rng.uniform() < cfg.fiber_fraction;

  const double g0 = db_to_lin(cfg.bs_antenna.g0_dbi);
  d.sbs_parent.assign(d.sbs.size(), -1);
  for (std::size_t s = 0; s < d.sbs.size(); ++s) {
    if (d.mbs.empty()) continue;
    double best_power = -1.0;
    for (std::size_t m = 0; m < d.mbs.size(); ++m) {
      // Backhaul beams aligned on both ends.
      const double p = avg_received_power_w(d.mbs[m], d.sbs[s],
                                            dbm_to_watts(cfg.p_mbs_dbm), g0, g0,
                                            d.field, cfg.closein);
      if (p > best_power) {
        best_power = p;
        d.sbs_parent[s] = static_cast<int>(m);
      }
    }
  }
  return d;
}

// Per-UE end-to-end rates for one drop. Every random draw below happens
// unconditionally, so sweeps over fiber fraction or threshold with matched
// seeds replay the identical randomness (common random numbers).
void drop_rates(const HetNetConfig& cfg, RngStream& rng, std::vector<double>& rates) {
  const Drop drop = build_drop(cfg, rng);
  rates.clear();
  if (drop.ue.empty()) return;
  if (drop.mbs.empty() && drop.sbs.empty()) {
    rates.assign(drop.ue.size(), 0.0);
    return;
  }

  const double sigma2 = noise_power_watts(cfg.noise);
  const double g0 = db_to_lin(cfg.bs_antenna.g0_dbi);
  const double g_ue = db_to_lin(cfg.ue_gain_dbi);

  // Blockage tests dominate the drop cost; evaluate each UE-station path
  // loss once and reuse it for association and interference.
  const std::size_t n_mbs = drop.mbs.size();
  const std::size_t n_bs = n_mbs + drop.sbs.size();
  std::vector<double> pl(drop.ue.size() * n_bs);
  auto bs_pos = [&](std::size_t b) {
    return b < n_mbs ? drop.mbs[b] : drop.sbs[b - n_mbs];
  };
  for (std::size_t u = 0; u < drop.ue.size(); ++u)
    for (std::size_t b = 0; b < n_bs; ++b)
      pl[u * n_bs + b] = pathloss_lin(bs_pos(b), drop.ue[u], drop.field, cfg.closein);

  std::vector<ServingNode> serving(drop.ue.size());
  std::vector<std::size_t> mbs_load(drop.mbs.size(), 0);
  std::vector<std::size_t> sbs_load(drop.sbs.size(), 0);
  const double sbs_bias = db_to_lin(cfg.sbs_selection_bias_db);
  for (std::size_t u = 0; u < drop.ue.size(); ++u) {
    // Maximum average received power with the tier bias, ties to the
    // nearest station.
    double best_power = -1.0;
    double best_dist = 0.0;
    for (std::size_t b = 0; b < n_bs; ++b) {
      const double p_dbm = b < n_mbs ? cfg.p_mbs_dbm : cfg.p_sbs_dbm;
      const double bias = b < n_mbs ? 1.0 : sbs_bias;
      const double p = bias * dbm_to_watts(p_dbm) * g0 * g_ue * pl[u * n_bs + b];
      const double d = link_distance(bs_pos(b), drop.ue[u]);
      if (p > best_power || (p == best_power && d < best_dist)) {
        best_power = p;
        best_dist = d;
        serving[u] = b < n_mbs ? ServingNode{true, b} : ServingNode{false, b - n_mbs};
      }
    }
    if (serving[u].is_mbs)
      ++mbs_load[serving[u].index];
    else
      ++sbs_load[serving[u].index];
  }

  // Backhaul demand in UE-equivalents: the bandwidth a wireless small cell
  // needs from its parent to carry one access UE, relative to one direct UE.
  // Using the access/backhaul spectral-efficiency ratio approximates the
  // coverage-maximizing split (the backhaul link is far more efficient than
  // the access links it feeds, so a fixed half-and-half split would waste
  // most of its share). All quantities below are fading-free, so the demand
  // is deterministic given the geometry.
  const double mean_sector_gain =
      cfg.bs_antenna.theta_hpbw_rad / kTwoPi * db_to_lin(cfg.bs_antenna.g0_dbi) +
      (1.0 - cfg.bs_antenna.theta_hpbw_rad / kTwoPi) *
          db_to_lin(cfg.bs_antenna.g_side_dbi);
  std::vector<double> avg_access_se(drop.ue.size(), 0.0);
  for (std::size_t u = 0; u < drop.ue.size(); ++u) {
    const std::size_t sv_b = serving[u].is_mbs ? serving[u].index
                                               : n_mbs + serving[u].index;
    const double p_sv = dbm_to_watts(serving[u].is_mbs ? cfg.p_mbs_dbm : cfg.p_sbs_dbm);
    const double s_avg = p_sv * g0 * g_ue * pl[u * n_bs + sv_b];
    double i_avg = 0.0;
    for (std::size_t b = 0; b < n_bs; ++b) {
      if (b == sv_b) continue;
      const bool loaded = b < n_mbs || sbs_load[b - n_mbs] > 0;
      if (!loaded) continue;
      const double p_dbm = b < n_mbs ? cfg.p_mbs_dbm : cfg.p_sbs_dbm;
      i_avg += dbm_to_watts(p_dbm) * mean_sector_gain * g_ue * pl[u * n_bs + b];
    }
    avg_access_se[u] = std::log2(1.0 + s_avg / (i_avg + sigma2));
  }

  // Demand carries a 2x fading margin and is capped at the load itself, so
  // the split never reserves more than half the band for backhaul.
  std::vector<double> sbs_demand(drop.sbs.size(), 0.0); // UE-equivalents
  for (std::size_t s = 0; s < drop.sbs.size(); ++s) {
    if (drop.sbs_fiber[s] || sbs_load[s] == 0 || drop.sbs_parent[s] < 0) continue;
    const auto m = static_cast<std::size_t>(drop.sbs_parent[s]);
    const double snr_bh = avg_received_power_w(drop.mbs[m], drop.sbs[s],
                                               dbm_to_watts(cfg.p_mbs_dbm), g0, g0,
                                               drop.field, cfg.closein) /
                          sigma2;
    const double se_bh = std::log2(1.0 + snr_bh);
    double se_sum = 0.0;
    for (std::size_t u = 0; u < drop.ue.size(); ++u)
      if (!serving[u].is_mbs && serving[u].index == s) se_sum += avg_access_se[u];
    const double se_mean = se_sum / static_cast<double>(sbs_load[s]);
    const double ratio = se_bh > 0.0 ? std::min(1.0, 1.25 * se_mean / se_bh) : 1.0;
    sbs_demand[s] = static_cast<double>(sbs_load[s]) * ratio;
  }

  // The macro side shares its backhaul bandwidth by raw downstream UE
  // counts; the per-child reservation above then caps actual usage.
  std::vector<double> mbs_backhaul_demand(drop.mbs.size(), 0.0);
  for (std::size_t s = 0; s < drop.sbs.size(); ++s)
    if (sbs_demand[s] > 0.0)
      mbs_backhaul_demand[static_cast<std::size_t>(drop.sbs_parent[s])] +=
          static_cast<double>(sbs_load[s]);

  // Macro stations are fiber-fed; their band is shared between own access
  // UEs and the backhaul they provide to child small cells.
  std::vector<BandwidthSplit> mbs_split(drop.mbs.size());
  for (std::size_t m = 0; m < drop.mbs.size(); ++m) {
    const double load = static_cast<double>(mbs_load[m]);
    const double demand = mbs_backhaul_demand[m];
    const double tot = load + demand;
    if (tot <= 0.0) continue;
    mbs_split[m] = {cfg.bandwidth_hz * load / tot, cfg.bandwidth_hz * demand / tot};
  }
  std::vector<BandwidthSplit> sbs_split(drop.sbs.size());
  for (std::size_t s = 0; s < drop.sbs.size(); ++s)
    sbs_split[s] = split_bandwidth(sbs_load[s], sbs_demand[s], cfg.bandwidth_hz,
                                   drop.sbs_fiber[s]);

  // Wireless backhaul rates: noise-limited and fading-hardened (a static
  // beamformed point-to-point link between large arrays).
  std::vector<double> sbs_backhaul_bps(drop.sbs.size(), 0.0);
  for (std::size_t s = 0; s < drop.sbs.size(); ++s) {
    if (drop.sbs_fiber[s] || sbs_load[s] == 0 || drop.sbs_parent[s] < 0) continue;
    const auto m = static_cast<std::size_t>(drop.sbs_parent[s]);
    const double share = mbs_backhaul_demand[m] > 0.0
                             ? mbs_split[m].backhaul_hz *
                                   static_cast<double>(sbs_load[s]) /
                                   mbs_backhaul_demand[m]
                             : 0.0;
    const double w_bh = std::min(share, sbs_split[s].backhaul_hz);
    if (w_bh <= 0.0) continue;
    const double p = avg_received_power_w(drop.mbs[m], drop.sbs[s],
                                          dbm_to_watts(cfg.p_mbs_dbm), g0, g0,
                                          drop.field, cfg.closein);
    sbs_backhaul_bps[s] = w_bh * std::log2(1.0 + p / sigma2);
  }

  std::vector<bool> mbs_active(drop.mbs.size());
  for (std::size_t m = 0; m < drop.mbs.size(); ++m)
    mbs_active[m] = mbs_load[m] > 0 || mbs_backhaul_demand[m] > 0.0;
  std::vector<bool> sbs_active(drop.sbs.size());
  for (std::size_t s = 0; s < drop.sbs.size(); ++s) sbs_active[s] = sbs_load[s] > 0;

  rates.reserve(drop.ue.size());
  for (std::size_t u = 0; u < drop.ue.size(); ++u) {
    const ServingNode sv = serving[u];
    const std::size_t sv_b = sv.is_mbs ? sv.index : n_mbs + sv.index;
    const double p_tx = dbm_to_watts(sv.is_mbs ? cfg.p_mbs_dbm : cfg.p_sbs_dbm);
    const double signal =
        std::norm(rng.cnormal()) * p_tx * g0 * g_ue * pl[u * n_bs + sv_b];
    double interference = 0.0;
    for (std::size_t b = 0; b < n_bs; ++b) {
      if (b == sv_b) continue;
      // Interfering beams point at their own users: random boresight.
      const double g_int = antenna_gain_lin(rng.uniform(-kPi, kPi), cfg.bs_antenna);
      const double h2 = std::norm(rng.cnormal());
      const bool active = b < n_mbs ? mbs_active[b] : sbs_active[b - n_mbs];
      const double p_dbm = b < n_mbs ? cfg.p_mbs_dbm : cfg.p_sbs_dbm;
      if (active)
        interference += h2 * dbm_to_watts(p_dbm) * g_int * g_ue * pl[u * n_bs + b];
    }

    const double sinr = signal / (interference + sigma2);
    double rate = 0.0;
    if (sv.is_mbs) {
      const double w_ue =
          mbs_split[sv.index].access_hz / static_cast<double>(mbs_load[sv.index]);
      rate = w_ue * std::log2(1.0 + sinr);
    } else {
      const double w_ue =
          sbs_split[sv.index].access_hz / static_cast<double>(sbs_load[sv.index]);
      rate = w_ue * std::log2(1.0 + sinr);
      if (!drop.sbs_fiber[sv.index]) {
        const double bh_share =
            sbs_backhaul_bps[sv.index] / static_cast<double>(sbs_load[sv.index]);
        rate = std::min(rate, bh_share);
      }
    }
    rates.push_back(rate);
  }
}

} // namespace

std::vector<CoverageResult> coverage_probability(const HetNetConfig& cfg,
                                                 std::size_t n_drops, RngStream rng,
                                                 std::span<const double> thresholds_bps) {
  if (n_drops < 1) throw std::invalid_argument("n_drops must be >= 1");
  if (cfg.fiber_fraction < 0.0 || cfg.fiber_fraction > 1.0)
    throw std::invalid_argument("fiber fraction must lie in [0, 1]");

  std::vector<std::uint64_t> covered(thresholds_bps.size(), 0);
  std::uint64_t total = 0;
  std::vector<double> rates;
  for (std::size_t di = 0; di < n_drops; ++di) {
    RngStream drop_rng = rng.substream(di);
    drop_rates(cfg, drop_rng, rates);
    total += rates.size();
    for (double r : rates)
      for (std::size_t t = 0; t < thresholds_bps.size(); ++t)
        if (r >= thresholds_bps[t]) ++covered[t];
  }
  if (total == 0) throw numerical_error("no UEs realized over the campaign");

  std::vector<CoverageResult> out(thresholds_bps.size());
  for (std::size_t t = 0; t < thresholds_bps.size(); ++t) {
    out[t].covered = covered[t];
    out[t].total_ues = total;
    out[t].coverage = static_cast<double>(covered[t]) / static_cast<double>(total);
    const WilsonCI ci = wilson_interval(covered[t], total);
    out[t].ci_lo = ci.lo;
    out[t].ci_hi = ci.hi;
  }
  return out;
}

CoverageResult coverage_probability(const HetNetConfig& cfg, std::size_t n_drops,
                                    RngStream rng) {
  const double thr[1] = {cfg.rate_threshold_bps};
  return coverage_probability(cfg, n_drops, rng, thr)[0];
}

double equivalent_density(const HetNetConfig& cfg, double target_coverage,
                          std::size_t n_drops, RngStream rng,
                          double density_lo_km2, double density_hi_km2) {
  if (target_coverage <= 0.0 || target_coverage >= 1.0)
    throw std::invalid_argument("target coverage must lie in (0, 1)");
  auto eval = [&](double density) {
    HetNetConfig c = cfg;
    c.sbs_density_km2 = density;
    return coverage_probability(c, n_drops, rng);
  };
  const CoverageResult at_lo = eval(density_lo_km2);
  const CoverageResult at_hi = eval(density_hi_km2);
  if (at_hi.coverage < target_coverage)
    throw numerical_error("equivalent_density: target unreachable at bracket top");
  if (at_lo.coverage > target_coverage)
    throw numerical_error("equivalent_density: bracket bottom already above target");

  double lo = density_lo_km2;
  double hi = density_hi_km2;
  for (int iter = 0; iter < 24; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const CoverageResult r = eval(mid);
    const double ci_halfwidth = 0.5 * (r.ci_hi - r.ci_lo);
    if (std::abs(r.coverage - target_coverage) < ci_halfwidth || (hi - lo) < 0.5)
      return mid;
    if (r.coverage < target_coverage)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace tbench::iab
