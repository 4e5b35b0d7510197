// SPDX-License-Identifier: Apache-2.0
#include "tbench/studies.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

#include "tbench/budget.hpp"
#include "tbench/cellfree.hpp"
#include "tbench/codedcache.hpp"
#include "tbench/csv.hpp"
#include "tbench/errors.hpp"
#include "tbench/iab.hpp"
#include "tbench/irs.hpp"
#include "tbench/pqam.hpp"
#include "tbench/thz.hpp"
#include "tbench/units.hpp"
#include "tbench/version.hpp"

namespace tbench::studies {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* field) {
  if (!j.contains(field))
    throw std::invalid_argument(std::string("missing required field: ") + field);
  return j.at(field);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_summary(const std::filesystem::path& out_dir, const std::string& study,
                   const json& effective_config, json extras) {
  json summary;
  summary["study"] = study;
  summary["software_version"] = kVersion;
  summary["config"] = effective_config;
  summary["results"] = std::move(extras);
  write_file(out_dir / "summary.json", summary.dump(2) + "\n");
}

// ---------------------------------------------------------------- budget ---

void run_budget(const json& cfg, const std::filesystem::path& out_dir) {
  const json& cases = require(cfg, "cases");
  CsvWriter csv("multiplexing,bandwidth_hz,se_bps_hz,total_bps");
  json effective = cfg;
  for (const json& c : cases) {
    auto opt = [&](const char* k) -> std::optional<double> {
      if (!c.contains(k)) return std::nullopt;
      return c.at(k).get<double>();
    };
    const double target = c.value("target_bps", 1e12);
    const CapacityBudget b =
        terabit_budget(opt("multiplexing"), opt("bandwidth_hz"), opt("se_bps_hz"), target);
    csv.row(b.multiplexing, b.bandwidth_hz, b.se_bps_hz, b.total_bps);
  }
  write_file(out_dir / "data.csv", csv.str());
  write_summary(out_dir, "budget", effective, json::object());
}

// -------------------------------------------------------------------- cc ---

void run_cc(const json& cfg, const std::filesystem::path& out_dir) {
  const json& cases = require(cfg, "cases");
  CsvWriter csv("k,m_over_n,l,t,factor,dof,subpacketization");
  for (const json& c : cases) {
    codedcache::CacheConfig cc;
    cc.n_users = require(c, "k").get<std::uint64_t>();
    cc.n_files = require(c, "n_files").get<std::uint64_t>();
    cc.cache_size_files = require(c, "cache_files").get<double>();
    cc.n_antennas = c.value("l", 1ULL);
    const double t = codedcache::cc_gain(cc);
    csv.row(cc.n_users, cc.cache_size_files / static_cast<double>(cc.n_files),
            cc.n_antennas, t, codedcache::rate_reduction_factor(cc),
            codedcache::multiantenna_dof(cc), codedcache::subpacketization_mn(cc));
  }
  write_file(out_dir / "data.csv", csv.str());
  write_summary(out_dir, "cc", cfg, json::object());
}

// ------------------------------------------------------------------- irs ---

void run_irs(json cfg, const std::filesystem::path& out_dir) {
  const double beta_d_db = require(cfg, "beta_d_db").get<double>();
  const auto n_elements = require(cfg, "n_elements").get<std::size_t>();
  const double lambda_m = cfg.contains("wavelength_m")
                              ? cfg.at("wavelength_m").get<double>()
                              : wavelength_m(require(cfg, "fc_hz").get<double>());
  cfg["wavelength_m"] = lambda_m;

  const json tx_j = cfg.value("tx", json::array({0.0, 0.0}));
  const json rx_j = cfg.value("rx", json::array({45.0, 0.0}));
  cfg["tx"] = tx_j;
  cfg["rx"] = rx_j;
  const Point2D tx{tx_j.at(0).get<double>(), tx_j.at(1).get<double>()};
  const Point2D rx{rx_j.at(0).get<double>(), rx_j.at(1).get<double>()};

  json track_j = cfg.value("track", json::object());
  const json from_j = track_j.value("from", json::array({2.5, 5.0}));
  const json to_j = track_j.value("to", json::array({42.5, 5.0}));
  const auto n_points = track_j.value("n_points", std::size_t{81});
  track_j["from"] = from_j;
  track_j["to"] = to_j;
  track_j["n_points"] = n_points;
  cfg["track"] = track_j;

  // Transmit power and noise default to 10 mW over 20 MHz with 0 dB noise
  // figure; these assumptions are echoed below.
  const double tx_power_w = cfg.value("tx_power_w", 0.01);
  cfg["tx_power_w"] = tx_power_w;
  NoiseSpec noise;
  noise.bandwidth_hz = 20e6;
  if (cfg.contains("noise")) {
    const json& nj = cfg.at("noise");
    noise.psd_dbm_hz = nj.value("psd_dbm_hz", -174.0);
    noise.bandwidth_hz = nj.value("bandwidth_hz", 20e6);
    noise.noise_figure_db = nj.value("noise_figure_db", 0.0);
  }
  cfg["noise"] = {{"psd_dbm_hz", noise.psd_dbm_hz},
                  {"bandwidth_hz", noise.bandwidth_hz},
                  {"noise_figure_db", noise.noise_figure_db}};

  std::vector<Point2D> track;
  track.reserve(n_points);
  const Point2D from{from_j.at(0).get<double>(), from_j.at(1).get<double>()};
  const Point2D to{to_j.at(0).get<double>(), to_j.at(1).get<double>()};
  for (std::size_t i = 0; i < n_points; ++i) {
    const double f = n_points > 1
                         ? static_cast<double>(i) / static_cast<double>(n_points - 1)
                         : 0.0;
    track.push_back({from.x + f * (to.x - from.x), from.y + f * (to.y - from.y)});
  }

  const std::vector<IrsSweepPoint> sweep =
      deployment_sweep(tx, rx, track, n_elements, lambda_m, db_to_lin(beta_d_db),
                       tx_power_w, noise_power_watts(noise));

  CsvWriter csv("position_m,beta_irs_db,gain_db,se_bps_hz");
  for (const auto& pt : sweep)
    csv.row(pt.position_m, lin_to_db(pt.beta_irs), lin_to_db(pt.gain), pt.se_bps_hz);
  write_file(out_dir / "data.csv", csv.str());

  json extras;
  extras["baseline_gain_db"] = beta_d_db;
  extras["noise_power_dbm"] = noise_power_dbm(noise);
  write_summary(out_dir, "irs", cfg, extras);
}

// -------------------------------------------------------------- cellfree ---

cellfree::Association parse_association(const std::string& s) {
  if (s == "fcf") return cellfree::Association::fcf;
  if (s == "uc") return cellfree::Association::user_centric;
  if (s == "mmimo") return cellfree::Association::mmimo;
  throw std::invalid_argument("association must be one of fcf|uc|mmimo");
}

void run_cellfree(json cfg, const std::filesystem::path& out_dir) {
  const auto seed = require(cfg, "seed").get<std::uint64_t>();
  const auto n_drops = cfg.value("n_drops", std::size_t{100});
  cfg["n_drops"] = n_drops;

  cellfree::CellFreeConfig cc;
  cc.n_ap = cfg.value("n_ap", cc.n_ap);
  cc.n_ant_per_ap = cfg.value("n_ant_per_ap", cc.n_ant_per_ap);
  cc.n_ue = cfg.value("n_ue", cc.n_ue);
  cc.region.side_m = cfg.value("side_m", cc.region.side_m);
  cc.tau_c = cfg.value("tau_c", cc.tau_c);
  cc.tau_p = cfg.value("tau_p", cc.tau_p);
  cc.bandwidth_hz = cfg.value("bandwidth_hz", cc.bandwidth_hz);
  cc.pilot_power_w = cfg.value("pilot_power_w", cc.pilot_power_w);
  cc.p_max_ap_dl_w = cfg.value("p_max_ap_dl_w", cc.p_max_ap_dl_w);
  cc.p_max_ul_w = cfg.value("p_max_ul_w", cc.p_max_ul_w);
  cc.association = parse_association(cfg.value("association", std::string("fcf")));
  cc.n_uc = cfg.value("n_uc", cc.n_uc);
  const std::string dl_rule = cfg.value("dl_rule", std::string("ppa"));
  if (dl_rule == "fpa")
    cc.dl_rule = cellfree::DlPowerRule::fpa;
  else if (dl_rule == "upa")
    cc.dl_rule = cellfree::DlPowerRule::upa;
  else if (dl_rule == "ppa")
    cc.dl_rule = cellfree::DlPowerRule::ppa;
  else
    throw std::invalid_argument("dl_rule must be one of ppa|fpa|upa");
  cc.alpha_dl = cfg.value("alpha_dl", cc.alpha_dl);
  cc.ul_rule = cfg.value("ul_rule", std::string("upa")) == "fpa"
                   ? cellfree::UlPowerRule::fpa
                   : cellfree::UlPowerRule::upa;
  cc.p0_ul_w = dbm_to_watts(cfg.value("p0_dbm", -10.0));
  cc.alpha_ul = cfg.value("alpha_ul", cc.alpha_ul);
  cc.noise.bandwidth_hz = cc.bandwidth_hz;
  cc.noise.noise_figure_db = cfg.value("noise_figure_db", 9.0);
  cc.pathloss.shadowing = cfg.value("shadowing", true);

  cfg["n_ap"] = cc.n_ap;
  cfg["n_ant_per_ap"] = cc.n_ant_per_ap;
  cfg["n_ue"] = cc.n_ue;
  cfg["side_m"] = cc.region.side_m;
  cfg["tau_c"] = cc.tau_c;
  cfg["tau_p"] = cc.tau_p;
  cfg["bandwidth_hz"] = cc.bandwidth_hz;
  cfg["pilot_power_w"] = cc.pilot_power_w;
  cfg["p_max_ap_dl_w"] = cc.p_max_ap_dl_w;
  cfg["p_max_ul_w"] = cc.p_max_ul_w;
  cfg["association"] = cfg.value("association", std::string("fcf"));
  cfg["n_uc"] = cc.n_uc;
  cfg["dl_rule"] = cfg.value("dl_rule", std::string("ppa"));
  cfg["alpha_dl"] = cc.alpha_dl;
  cfg["ul_rule"] = cfg.value("ul_rule", std::string("upa"));
  cfg["p0_dbm"] = cfg.value("p0_dbm", -10.0);
  cfg["alpha_ul"] = cc.alpha_ul;
  cfg["noise_figure_db"] = cc.noise.noise_figure_db;
  cfg["shadowing"] = cc.pathloss.shadowing;

  const cellfree::CampaignResult res = run_campaign(cc, n_drops, RngStream(seed, 0));

  CsvWriter csv("drop,ue,direction,rate_bps");
  for (std::size_t i = 0; i < res.dl.samples_bps.size(); ++i) {
    csv.row(res.drop_index[i], res.ue_index[i], "dl", res.dl.samples_bps[i]);
    csv.row(res.drop_index[i], res.ue_index[i], "ul", res.ul.samples_bps[i]);
  }
  write_file(out_dir / "data.csv", csv.str());

  json extras;
  extras["large_scale_model"] = ThreeSlopeParams::kModelId;
  for (const char* dir : {"dl", "ul"}) {
    const auto& stats = dir == std::string("dl") ? res.dl : res.ul;
    json p;
    for (const auto& [level, value] : stats.percentiles_bps)
      p[format_double(level)] = value;
    extras[std::string(dir) + "_percentiles_bps"] = p;
  }
  write_summary(out_dir, "cellfree", cfg, extras);
}

// ------------------------------------------------------------------- iab ---

void run_iab(json cfg, const std::filesystem::path& out_dir) {
  const auto seed = require(cfg, "seed").get<std::uint64_t>();
  const auto n_drops = cfg.value("n_drops", std::size_t{500});
  cfg["n_drops"] = n_drops;

  iab::HetNetConfig hc;
  hc.mbs_density_km2 = cfg.value("mbs_density_km2", hc.mbs_density_km2);
  hc.ue_density_km2 = cfg.value("ue_density_km2", hc.ue_density_km2);
  hc.blockage_density_km2 = cfg.value("blockage_density_km2", hc.blockage_density_km2);
  hc.wall_length_m = cfg.value("wall_length_m", hc.wall_length_m);
  hc.bandwidth_hz = cfg.value("bandwidth_hz", hc.bandwidth_hz);
  hc.p_mbs_dbm = cfg.value("p_mbs_dbm", hc.p_mbs_dbm);
  hc.p_sbs_dbm = cfg.value("p_sbs_dbm", hc.p_sbs_dbm);
  hc.p_ue_dbm = cfg.value("p_ue_dbm", hc.p_ue_dbm);
  hc.closein.fc_ghz = cfg.value("fc_ghz", hc.closein.fc_ghz);
  hc.closein.alpha_los = cfg.value("alpha_los", hc.closein.alpha_los);
  hc.closein.alpha_nlos = cfg.value("alpha_nlos", hc.closein.alpha_nlos);
  hc.noise.bandwidth_hz = hc.bandwidth_hz;
  hc.noise.noise_figure_db = cfg.value("noise_figure_db", hc.noise.noise_figure_db);
  hc.region.side_m = cfg.value("side_m", hc.region.side_m);
  hc.sbs_selection_bias_db = cfg.value("sbs_selection_bias_db", hc.sbs_selection_bias_db);
  if (cfg.contains("antenna")) {
    const json& a = cfg.at("antenna");
    hc.bs_antenna.g0_dbi = a.value("g0_dbi", hc.bs_antenna.g0_dbi);
    hc.bs_antenna.g_side_dbi = a.value("g_side_dbi", hc.bs_antenna.g_side_dbi);
    if (a.contains("theta_hpbw_deg"))
      hc.bs_antenna.theta_hpbw_rad = a.at("theta_hpbw_deg").get<double>() * kPi / 180.0;
  }

  std::vector<double> fiber_fractions = {hc.fiber_fraction};
  if (cfg.contains("fiber_fractions"))
    fiber_fractions = cfg.at("fiber_fractions").get<std::vector<double>>();
  else if (cfg.contains("fiber_fraction"))
    fiber_fractions = {cfg.at("fiber_fraction").get<double>()};
  std::vector<double> densities = {cfg.value("sbs_density_km2", hc.sbs_density_km2)};
  if (cfg.contains("sbs_densities_km2"))
    densities = cfg.at("sbs_densities_km2").get<std::vector<double>>();
  std::vector<double> thresholds = {cfg.value("threshold_bps", hc.rate_threshold_bps)};
  if (cfg.contains("thresholds_bps"))
    thresholds = cfg.at("thresholds_bps").get<std::vector<double>>();

  cfg["mbs_density_km2"] = hc.mbs_density_km2;
  cfg["ue_density_km2"] = hc.ue_density_km2;
  cfg["blockage_density_km2"] = hc.blockage_density_km2;
  cfg["wall_length_m"] = hc.wall_length_m;
  cfg["bandwidth_hz"] = hc.bandwidth_hz;
  cfg["p_mbs_dbm"] = hc.p_mbs_dbm;
  cfg["p_sbs_dbm"] = hc.p_sbs_dbm;
  cfg["p_ue_dbm"] = hc.p_ue_dbm;
  cfg["fc_ghz"] = hc.closein.fc_ghz;
  cfg["alpha_los"] = hc.closein.alpha_los;
  cfg["alpha_nlos"] = hc.closein.alpha_nlos;
  cfg["noise_figure_db"] = hc.noise.noise_figure_db;
  cfg["side_m"] = hc.region.side_m;
  cfg["sbs_selection_bias_db"] = cfg.value("sbs_selection_bias_db", hc.sbs_selection_bias_db);
  cfg["antenna"] = {{"g0_dbi", hc.bs_antenna.g0_dbi},
                    {"g_side_dbi", hc.bs_antenna.g_side_dbi},
                    {"theta_hpbw_deg", hc.bs_antenna.theta_hpbw_rad * 180.0 / kPi}};
  cfg["fiber_fractions"] = fiber_fractions;
  cfg["sbs_densities_km2"] = densities;
  cfg["thresholds_bps"] = thresholds;
  cfg.erase("fiber_fraction");
  cfg.erase("sbs_density_km2");
  cfg.erase("threshold_bps");

  CsvWriter csv("fiber_fraction,sbs_density,threshold_bps,coverage,ci_low,ci_high");
  for (double ff : fiber_fractions) {
    for (double dens : densities) {
      iab::HetNetConfig run_cfg = hc;
      run_cfg.fiber_fraction = ff;
      run_cfg.sbs_density_km2 = dens;
      // Matched seeds across the sweep grid.
      const auto res =
          coverage_probability(run_cfg, n_drops, RngStream(seed, 0), thresholds);
      for (std::size_t t = 0; t < thresholds.size(); ++t)
        csv.row(ff, dens, thresholds[t], res[t].coverage, res[t].ci_lo, res[t].ci_hi);
    }
  }
  write_file(out_dir / "data.csv", csv.str());
  write_summary(out_dir, "iab", cfg, json::object());
}

// ------------------------------------------------------------------ pqam ---

void run_pqam(json cfg, const std::filesystem::path& out_dir) {
  const auto seed = require(cfg, "seed").get<std::uint64_t>();
  const json& schemes = require(cfg, "schemes");
  const auto snrs = require(cfg, "snr_db").get<std::vector<double>>();
  const auto sigmas = require(cfg, "sigma_phi_sq").get<std::vector<double>>();
  const std::string metric = cfg.value("metric", std::string("ser"));
  const auto n_symbols = cfg.value("n_symbols", std::size_t{100000});
  const auto n_mi_samples = cfg.value("n_mi_samples", std::size_t{20000});
  const bool dump = cfg.value("dump_constellations", true);
  cfg["metric"] = metric;
  cfg["n_symbols"] = n_symbols;
  cfg["n_mi_samples"] = n_mi_samples;
  cfg["dump_constellations"] = dump;

  CsvWriter csv("snr_db,sigma_phi_sq,scheme,gamma," + metric + ",ci_lo,ci_hi");
  std::uint64_t scheme_id = 0;
  for (const json& s : schemes) {
    const std::string type = require(s, "type").get<std::string>();
    const auto m = require(s, "m").get<std::size_t>();
    std::string name;
    std::size_t gamma = 0;
    pqam::PqamConstellation pq;
    pqam::Constellation qam;
    const bool is_pqam = type == "pqam";
    if (is_pqam) {
      gamma = require(s, "gamma").get<std::size_t>();
      pq = pqam::generate(m, gamma);
      name = std::to_string(m) + "-pqam";
    } else if (type == "qam") {
      qam = pqam::make_square_qam(m);
      name = std::to_string(m) + "-qam";
    } else {
      throw std::invalid_argument("scheme type must be pqam or qam");
    }
    const std::string detector = s.value("detector", std::string("euclidean"));
    name += "-" + detector;

    std::vector<pqam::PnChannelSpec> grid;
    for (double sg : sigmas)
      for (double snr : snrs) grid.push_back({sg, snr});

    RngStream rng(seed, scheme_id);
    if (metric == "ser") {
      std::vector<pqam::SerPoint> pts;
      if (is_pqam) {
        const auto det = detector == "polar" ? pqam::Detector::polar
                                             : pqam::Detector::euclidean;
        pts = ser_sweep(pq, det, grid, n_symbols, rng);
      } else {
        pts = ser_sweep(qam, grid, n_symbols, rng);
      }
      for (const auto& p : pts)
        csv.row(p.snr_db, p.sigma_phi_sq, name, gamma, p.ser, p.ci_lo, p.ci_hi);
    } else if (metric == "mi") {
      for (const auto& spec : grid) {
        const auto& base = is_pqam ? static_cast<const pqam::Constellation&>(pq) : qam;
        const auto est = mi_estimate_with_ci(base, spec, n_mi_samples, rng.substream(0));
        csv.row(spec.snr_db, spec.sigma_phi_sq, name, gamma, est.mi_bits, est.ci_lo,
                est.ci_hi);
      }
    } else {
      throw std::invalid_argument("metric must be ser or mi");
    }

    if (dump) {
      const auto& base = is_pqam ? static_cast<const pqam::Constellation&>(pq) : qam;
      CsvWriter dump_csv("index,re,im,bits");
      for (std::size_t i = 0; i < base.points.size(); ++i)
        dump_csv.row(i, base.points[i].real(), base.points[i].imag(),
                     static_cast<std::uint64_t>(base.bit_labels[i]));
      write_file(out_dir / ("constellation_" + name + ".csv"), dump_csv.str());
    }
    ++scheme_id;
  }
  write_file(out_dir / "data.csv", csv.str());
  write_summary(out_dir, "pqam", cfg, json::object());
}

// ------------------------------------------------------------------- thz ---

void run_thz(json cfg, const std::filesystem::path& out_dir) {
  const std::string mode = require(cfg, "mode").get<std::string>();
  if (mode == "sweep") {
    const auto deltas = require(cfg, "deltas_m").get<std::vector<double>>();
    const auto shapes = require(cfg, "shapes").get<std::vector<std::vector<std::size_t>>>();
    const double fc = cfg.value("fc_hz", 1e12);
    cfg["fc_hz"] = fc;
    CsvWriter csv("n_antennas,fc_hz,delta_m,d_ray_m");
    for (const auto& shape : shapes) {
      const std::size_t n = shape.at(0) * shape.at(1);
      for (double d : deltas)
        csv.row(n, fc, d, thz::rayleigh_distance_m(n, d, d, wavelength_m(fc)));
    }
    write_file(out_dir / "data.csv", csv.str());
    write_summary(out_dir, "thz", cfg, json::object());
    return;
  }
  if (mode != "ber") throw std::invalid_argument("thz mode must be sweep or ber");

  const auto seed = require(cfg, "seed").get<std::uint64_t>();
  thz::ArrayConfig ac;
  ac.rows = cfg.value("rows", std::size_t{2});
  ac.cols = cfg.value("cols", std::size_t{2});
  ac.fc_hz = cfg.value("fc_hz", 1e12);
  ac.range_m = cfg.value("range_m", 1.0);
  const double lambda = wavelength_m(ac.fc_hz);
  // Per-axis tuning keeps a planar array orthogonal; see los_channel() notes.
  const double delta_axis = thz::optimal_separation_m(
      ac.range_m, std::max(ac.rows, ac.cols), lambda);
  const std::string tuning = cfg.value("tuning", std::string("optimal"));
  double delta = delta_axis;
  if (cfg.contains("delta_m"))
    delta = cfg.at("delta_m").get<double>();
  else if (tuning == "mistuned_tenth")
    delta = delta_axis / 10.0;
  else if (tuning != "optimal")
    throw std::invalid_argument("tuning must be optimal or mistuned_tenth");
  ac.delta_t_m = ac.delta_r_m = delta;

  const auto snrs = require(cfg, "snr_db").get<std::vector<double>>();
  const auto n_uses = cfg.value("n_uses", std::size_t{20000});
  const double bf_gain = cfg.value("beamforming_gain_db", 0.0);
  cfg["rows"] = ac.rows;
  cfg["cols"] = ac.cols;
  cfg["fc_hz"] = ac.fc_hz;
  cfg["range_m"] = ac.range_m;
  cfg["delta_m"] = delta;
  cfg["n_uses"] = n_uses;
  cfg["beamforming_gain_db"] = bf_gain;
  cfg.erase("tuning");

  const auto pts = thz::multiplex_ber(ac, snrs, n_uses, RngStream(seed, 0), bf_gain);
  CsvWriter csv("snr_db,ber,ci_lo,ci_hi");
  for (const auto& p : pts) csv.row(p.snr_db, p.ber, p.ci_lo, p.ci_hi);
  write_file(out_dir / "data.csv", csv.str());

  json extras;
  extras["delta_m"] = delta;
  extras["condition_number"] = condition_number(thz::los_channel(ac));
  extras["rayleigh_distance_m"] = thz::rayleigh_distance_m(ac);
  write_summary(out_dir, "thz", cfg, extras);
}

} // namespace

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path.string());
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  return cfg;
}

void run_study(json config, const std::filesystem::path& out_dir) {
  const std::string study = require(config, "study").get<std::string>();
  std::filesystem::create_directories(out_dir);
  try {
    if (study == "budget") return run_budget(config, out_dir);
    if (study == "cc") return run_cc(config, out_dir);
    if (study == "irs") return run_irs(std::move(config), out_dir);
    if (study == "cellfree") return run_cellfree(std::move(config), out_dir);
    if (study == "iab") return run_iab(std::move(config), out_dir);
    if (study == "pqam") return run_pqam(std::move(config), out_dir);
    if (study == "thz") return run_thz(std::move(config), out_dir);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config error: ") + e.what());
  }
  throw std::invalid_argument("unknown study: " + study);
}

} // namespace tbench::studies
