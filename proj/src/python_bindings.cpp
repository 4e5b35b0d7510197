// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tbench/budget.hpp"
#include "tbench/cellfree.hpp"
#include "tbench/codedcache.hpp"
#include "tbench/geometry.hpp"
#include "tbench/irs.hpp"
#include "tbench/linalg.hpp"
#include "tbench/pqam.hpp"
#include "tbench/propagation.hpp"
#include "tbench/stats.hpp"
#include "tbench/thz.hpp"
#include "tbench/units.hpp"
#include "tbench/version.hpp"

namespace py = pybind11;
using namespace tbench;

PYBIND11_MODULE(_tbench, m) {
  m.doc() = "6G link- and system-level simulation workbench";
  m.attr("__version__") = kVersion;

  // ------------------------------------------------------------- core ---
  py::class_<Region>(m, "Region")
      .def(py::init([](double side_m, bool wrap) {
             return Region{side_m, wrap};
           }),
           py::arg("side_m"), py::arg("wrap_around") = false)
      .def_readonly("side_m", &Region::side_m)
      .def_readonly("wrap_around", &Region::wrap_around);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"),
           py::arg("stream_id") = 0)
      .def("uniform", [](RngStream& r) { return r.uniform(); })
      .def("normal", &RngStream::normal)
      .def("poisson", &RngStream::poisson);

  m.def(
      "wrap_distance",
      [](std::pair<double, double> a, std::pair<double, double> b, const Region& r) {
        return wrap_distance({a.first, a.second}, {b.first, b.second}, r);
      },
      py::arg("a"), py::arg("b"), py::arg("region"));

  m.def(
      "sample_fhppp",
      [](double density, const Region& r, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        std::vector<std::pair<double, double>> out;
        for (const Point2D& p : sample_fhppp(density, r, rng))
          out.emplace_back(p.x, p.y);
        return out;
      },
      py::arg("density_per_km2"), py::arg("region"), py::arg("seed"),
      py::arg("stream_id") = 0);

  // ------------------------------------------------------ propagation ---
  m.def(
      "noise_power_dbm",
      [](double bandwidth_hz, double noise_figure_db, double psd_dbm_hz) {
        return noise_power_dbm({psd_dbm_hz, bandwidth_hz, noise_figure_db});
      },
      py::arg("bandwidth_hz"), py::arg("noise_figure_db") = 0.0,
      py::arg("psd_dbm_hz") = -174.0);

  m.def(
      "closein_pathloss_db",
      [](double r_m, double alpha, double fc_ghz) {
        return closein_pathloss_db(r_m, {alpha, alpha, fc_ghz}, true);
      },
      py::arg("r_m"), py::arg("alpha"), py::arg("fc_ghz"));

  // -------------------------------------------------------------- irs ---
  m.def(
      "irs_optimal_gain",
      [](double beta_d, std::size_t n_elements, double beta_irs) {
        IrsLinkConfig cfg;
        cfg.beta_d = beta_d;
        cfg.n_elements = n_elements;
        cfg.beta_irs = beta_irs;
        cfg.psi_tx_rad.assign(n_elements, 0.0);
        cfg.psi_rx_rad.assign(n_elements, 0.0);
        return composite_gain(cfg, optimal_phases(cfg));
      },
      py::arg("beta_d"), py::arg("n_elements"), py::arg("beta_irs"),
      "End-to-end gain with every scattered path co-phased to the direct one");

  // ------------------------------------------------------------- pqam ---
  py::class_<pqam::PqamConstellation>(m, "PqamConstellation")
      .def_readonly("order", &pqam::PqamConstellation::order)
      .def_readonly("rings", &pqam::PqamConstellation::rings)
      .def_readonly("points", &pqam::PqamConstellation::points)
      .def_readonly("bit_labels", &pqam::PqamConstellation::bit_labels);

  m.def("pqam", &pqam::generate, py::arg("order"), py::arg("rings"),
        py::arg("inter_ring_phase_offset_rad") = 0.0);
  m.def("papr", [](const pqam::PqamConstellation& c) { return pqam::papr(c); });
  m.def("pqam_papr_closed_form", &pqam::papr_closed_form, py::arg("rings"));

  // -------------------------------------------------------------- thz ---
  m.def("spreading_loss_db", &thz::spreading_loss_db, py::arg("f_hz"), py::arg("d_m"));
  m.def("absorption_loss_db", &thz::absorption_loss_db, py::arg("k_abs_per_m"),
        py::arg("d_m"));
  m.def(
      "rayleigh_distance_m",
      [](std::size_t n_max, double delta_r, double delta_t, double lambda_m) {
        return thz::rayleigh_distance_m(n_max, delta_r, delta_t, lambda_m);
      },
      py::arg("n_max"), py::arg("delta_r_m"), py::arg("delta_t_m"), py::arg("lambda_m"));
  m.def("optimal_separation_m", &thz::optimal_separation_m, py::arg("range_m"),
        py::arg("n_max"), py::arg("lambda_m"));
  m.def(
      "los_channel_condition_number",
      [](std::size_t rows, std::size_t cols, double delta_m, double fc_hz, double range_m) {
        thz::ArrayConfig cfg{rows, cols, delta_m, delta_m, fc_hz, range_m};
        return condition_number(thz::los_channel(cfg));
      },
      py::arg("rows"), py::arg("cols"), py::arg("delta_m"), py::arg("fc_hz"),
      py::arg("range_m"));

  // ----------------------------------------------------- coded caching ---
  m.def(
      "cc_gain",
      [](std::uint64_t k, double cache_files, std::uint64_t n_files, std::uint64_t l) {
        return codedcache::cc_gain({k, cache_files, n_files, l});
      },
      py::arg("k"), py::arg("cache_files"), py::arg("n_files"), py::arg("l") = 1);
  m.def(
      "cc_subpacketization",
      [](std::uint64_t k, double cache_files, std::uint64_t n_files) {
        return codedcache::subpacketization_mn({k, cache_files, n_files, 1});
      },
      py::arg("k"), py::arg("cache_files"), py::arg("n_files"));

  // ------------------------------------------------------------ budget ---
  m.def(
      "terabit_budget",
      [](std::optional<double> multiplexing, std::optional<double> bandwidth_hz,
         std::optional<double> se_bps_hz, double target_bps) {
        const CapacityBudget b =
            terabit_budget(multiplexing, bandwidth_hz, se_bps_hz, target_bps);
        return py::make_tuple(b.multiplexing, b.bandwidth_hz, b.se_bps_hz, b.total_bps);
      },
      py::arg("multiplexing") = std::nullopt, py::arg("bandwidth_hz") = std::nullopt,
      py::arg("se_bps_hz") = std::nullopt, py::arg("target_bps") = 1e12);

  // ------------------------------------------------------------- stats ---
  m.def(
      "percentiles",
      [](const std::vector<double>& samples, const std::vector<double>& levels) {
        return percentiles(samples, levels);
      },
      py::arg("samples"), py::arg("levels"));

  // ---------------------------------------------------------- cellfree ---
  m.def(
      "cellfree_table_run",
      [](std::uint64_t seed, std::size_t n_drops, const std::string& association,
         std::size_t n_uc) {
        cellfree::CellFreeConfig cfg;
        if (association == "uc") {
          cfg.association = cellfree::Association::user_centric;
          cfg.n_uc = n_uc;
        } else if (association == "mmimo") {
          cfg.association = cellfree::Association::mmimo;
        }
        const auto res = run_campaign(cfg, n_drops, RngStream(seed, 0));
        py::dict out;
        py::dict dl, ul;
        for (const auto& [lvl, v] : res.dl.percentiles_bps) dl[py::float_(lvl)] = v;
        for (const auto& [lvl, v] : res.ul.percentiles_bps) ul[py::float_(lvl)] = v;
        out["dl_percentiles_bps"] = dl;
        out["ul_percentiles_bps"] = ul;
        return out;
      },
      py::arg("seed"), py::arg("n_drops") = 10, py::arg("association") = "fcf",
      py::arg("n_uc") = 10,
      "Rate percentiles for the default cell-free configuration");
}
