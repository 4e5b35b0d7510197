// SPDX-License-Identifier: Apache-2.0
#include "tbench/pqam.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tbench/stats.hpp"
#include "tbench/units.hpp"

namespace tbench::pqam {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint32_t gray(std::uint32_t v) { return v ^ (v >> 1); }

std::size_t int_log2(std::size_t v) {
  std::size_t n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

} // namespace

PqamConstellation generate(std::size_t order, std::size_t rings,
                           double inter_ring_phase_offset_rad) {
  if (!is_power_of_two(order) || order < 2)
    throw std::invalid_argument("PQAM order must be a power of two >= 2");
  if (!is_power_of_two(rings) || rings > order)
    throw std::invalid_argument("ring count must be a power of two dividing M, 1..M");

  PqamConstellation c;
  c.order = order;
  c.rings = rings;
  c.phases_per_ring = order / rings;
  c.inter_ring_phase_offset_rad = inter_ring_phase_offset_rad;
  c.bits_per_symbol = int_log2(order);

  // mean of (2i-1)^2 over i = 1..G is (4G^2 - 1)/3; dividing by its square
  // root gives unit average energy with M/G points per ring.
  const double g = static_cast<double>(rings);
  const double norm = std::sqrt((4.0 * g * g - 1.0) / 3.0);
  const std::size_t ring_bits = int_log2(rings);

  c.points.reserve(order);
  c.bit_labels.reserve(order);
  c.ring_of.reserve(order);
  c.phase_index_of.reserve(order);
  c.ring_radii.reserve(rings);
  for (std::size_t i = 0; i < rings; ++i) {
    const double radius = static_cast<double>(2 * i + 1) / norm;
    c.ring_radii.push_back(radius);
    const double offset = inter_ring_phase_offset_rad * static_cast<double>(i);
    for (std::size_t j = 0; j < c.phases_per_ring; ++j) {
      const double phase =
          offset + kTwoPi * static_cast<double>(j) / static_cast<double>(c.phases_per_ring);
      c.points.push_back(std::polar(radius, phase));
      c.ring_of.push_back(i);
      c.phase_index_of.push_back(j);
      // Gray code on the ring index and the phase index separately.
      const std::uint32_t label =
          (gray(static_cast<std::uint32_t>(i)) << (c.bits_per_symbol - ring_bits)) |
          gray(static_cast<std::uint32_t>(j));
      c.bit_labels.push_back(label);
    }
  }
  return c;
}

Constellation make_square_qam(std::size_t order) {
  const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(order))));
  if (side * side != order || !is_power_of_two(side))
    throw std::invalid_argument("square QAM order must be a power of 4");
  Constellation c;
  c.bits_per_symbol = int_log2(order);
  const std::size_t axis_bits = c.bits_per_symbol / 2;
  // mean energy of the unnormalized grid: 2 * mean of (2a - side + 1)^2.
  double energy = 0.0;
  for (std::size_t a = 0; a < side; ++a) {
    const double v = 2.0 * static_cast<double>(a) - static_cast<double>(side) + 1.0;
    energy += 2.0 * v * v;
  }
  const double norm = std::sqrt(energy / static_cast<double>(side));
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      const double re = (2.0 * static_cast<double>(a) - static_cast<double>(side) + 1.0) / norm;
      const double im = (2.0 * static_cast<double>(b) - static_cast<double>(side) + 1.0) / norm;
      c.points.emplace_back(re, im);
      const std::uint32_t label =
          (gray(static_cast<std::uint32_t>(a)) << axis_bits) | gray(static_cast<std::uint32_t>(b));
      c.bit_labels.push_back(label);
    }
  }
  return c;
}

double papr(const Constellation& c) {
  if (c.points.empty()) throw std::invalid_argument("empty constellation");
  double peak = 0.0;
  double mean = 0.0;
  for (const auto& p : c.points) {
    const double e = std::norm(p);
    peak = std::max(peak, e);
    mean += e;
  }
  mean /= static_cast<double>(c.points.size());
  return peak / mean;
}

double papr_closed_form(std::size_t rings) {
  const double g = static_cast<double>(rings);
  return 3.0 * (2.0 * g - 1.0) / (2.0 * g + 1.0);
}

double noise_variance(const PnChannelSpec& spec) {
  return std::pow(10.0, -spec.snr_db / 10.0);
}

std::complex<double> pn_channel(std::complex<double> x, const PnChannelSpec& spec,
                                RngStream& rng) {
  if (spec.sigma_phi_sq < 0.0)
    throw std::invalid_argument("phase-noise variance must be >= 0");
  const double phi =
      spec.sigma_phi_sq > 0.0 ? std::sqrt(spec.sigma_phi_sq) * rng.normal() : 0.0;
  const std::complex<double> rotated = x * std::polar(1.0, phi);
  const double sigma_n = std::sqrt(noise_variance(spec));
  return rotated + sigma_n * rng.cnormal();
}

std::size_t detect_euclidean(std::complex<double> y, const Constellation& c) {
  std::size_t best = 0;
  double best_d = std::norm(y - c.points[0]);
  for (std::size_t i = 1; i < c.points.size(); ++i) {
    const double d = std::norm(y - c.points[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::size_t detect_polar(std::complex<double> y, const PqamConstellation& c,
                         const PnChannelSpec& spec) {
  const double amp = std::abs(y);
  const double sigma_n2 = noise_variance(spec);
  const double amp_var = 0.5 * sigma_n2;

  std::size_t ring = 0;
  double best = (amp - c.ring_radii[0]) * (amp - c.ring_radii[0]) / amp_var;
  for (std::size_t i = 1; i < c.rings; ++i) {
    const double r = (amp - c.ring_radii[i]) * (amp - c.ring_radii[i]) / amp_var;
    if (r < best) {
      best = r;
      ring = i;
    }
  }

  // Phase reference taken from the ring's slot-0 point, so a globally
  // rotated constellation detects consistently.
  const double offset = std::arg(c.points[ring * c.phases_per_ring]);
  const double step = kTwoPi / static_cast<double>(c.phases_per_ring);
  const double rel = wrap_2pi(std::arg(y) - offset);
  auto slot = static_cast<std::size_t>(std::lround(rel / step)) % c.phases_per_ring;
  // The weighted phase residual (variance sigma_phi^2 + sigma_n^2/(2 r^2))
  // is a constant rescaling within a ring, so the nearest slot is optimal.
  return ring * c.phases_per_ring + slot;
}

namespace {


template <typename DetectFn>
std::vector<SerPoint> ser_sweep_impl(const Constellation& c, DetectFn&& detect,
                                     const std::vector<PnChannelSpec>& grid,
                                     std::size_t n_symbols, RngStream& rng) {
  // One substream per distinct sigma_phi_sq: SNR points within a sigma level
  // replay the identical symbol/phase/noise draws (common random numbers).
  std::vector<double> sigma_levels;
  for (const auto& g : grid)
    if (std::find(sigma_levels.begin(), sigma_levels.end(), g.sigma_phi_sq) ==
        sigma_levels.end())
      sigma_levels.push_back(g.sigma_phi_sq);

  std::vector<SerPoint> out;
  out.reserve(grid.size());
  for (const auto& spec : grid) {
    const auto level = static_cast<std::uint64_t>(
        std::distance(sigma_levels.begin(),
                      std::find(sigma_levels.begin(), sigma_levels.end(), spec.sigma_phi_sq)));
    RngStream stream = rng.substream(level);
    std::uint64_t errors = 0;
    for (std::size_t s = 0; s < n_symbols; ++s) {
      const std::size_t tx = stream.uniform_int(c.points.size());
      const std::complex<double> y = pn_channel(c.points[tx], spec, stream);
      if (detect(y, spec) != tx) ++errors;
    }
    SerPoint pt;
    pt.snr_db = spec.snr_db;
    pt.sigma_phi_sq = spec.sigma_phi_sq;
    pt.errors = errors;
    pt.trials = n_symbols;
    pt.ser = static_cast<double>(errors) / static_cast<double>(n_symbols);
    const WilsonCI ci = wilson_interval(errors, n_symbols);
    pt.ci_lo = ci.lo;
    pt.ci_hi = ci.hi;
    out.push_back(pt);
  }
  return out;
}

} // namespace

std::vector<SerPoint> ser_sweep(const PqamConstellation& c, Detector det,
                                const std::vector<PnChannelSpec>& grid,
                                std::size_t n_symbols, RngStream rng) {
  if (det == Detector::euclidean)
    return ser_sweep_impl(
        c, [&](std::complex<double> y, const PnChannelSpec&) { return detect_euclidean(y, c); },
        grid, n_symbols, rng);
  return ser_sweep_impl(
      c, [&](std::complex<double> y, const PnChannelSpec& spec) { return detect_polar(y, c, spec); },
      grid, n_symbols, rng);
}

std::vector<SerPoint> ser_sweep(const Constellation& c,
                                const std::vector<PnChannelSpec>& grid,
                                std::size_t n_symbols, RngStream rng) {
  return ser_sweep_impl(
      c, [&](std::complex<double> y, const PnChannelSpec&) { return detect_euclidean(y, c); },
      grid, n_symbols, rng);
}

double mi_estimate(const Constellation& c, const PnChannelSpec& spec,
                   std::size_t n_samples, RngStream rng) {
  return mi_estimate_with_ci(c, spec, n_samples, rng).mi_bits;
}

MiEstimate mi_estimate_with_ci(const Constellation& c, const PnChannelSpec& spec,
                               std::size_t n_samples, RngStream rng) {
  if (n_samples < 10000)
    throw std::invalid_argument("mutual-information estimate needs >= 1e4 samples");
  const std::size_t m = c.points.size();
  const double sigma_n2 = noise_variance(spec);
  const double sigma_phi = std::sqrt(spec.sigma_phi_sq);

  // Quadrature nodes over the phase-noise density (trapezoid on +-6 sigma).
  std::vector<double> nodes{0.0};
  std::vector<double> logw{0.0}; // log of the normalized weights
  if (sigma_phi > 0.0) {
    constexpr int kNodes = 201;
    nodes.assign(kNodes, 0.0);
    std::vector<double> w(kNodes);
    const double lo = -6.0 * sigma_phi;
    const double step = 12.0 * sigma_phi / (kNodes - 1);
    double wsum = 0.0;
    for (int i = 0; i < kNodes; ++i) {
      nodes[i] = lo + step * i;
      const double z = nodes[i] / sigma_phi;
      w[i] = std::exp(-0.5 * z * z);
      if (i == 0 || i == kNodes - 1) w[i] *= 0.5;
      wsum += w[i];
    }
    logw.resize(kNodes);
    for (int i = 0; i < kNodes; ++i) logw[i] = std::log(w[i] / wsum);
  }

  // log p(y|x) up to a constant common to all x (it cancels in the ratio).
  auto log_lik = [&](std::complex<double> y, std::complex<double> x) {
    double best = -1e300;
    std::vector<double> terms(nodes.size());
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      const std::complex<double> mean = x * std::polar(1.0, nodes[q]);
      terms[q] = logw[q] - std::norm(y - mean) / sigma_n2;
      best = std::max(best, terms[q]);
    }
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - best);
    return best + std::log(acc);
  };

  const double log_m = std::log(static_cast<double>(m));
  double acc_bits = 0.0;
  double acc_sq = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const std::size_t tx = rng.uniform_int(m);
    const std::complex<double> y = pn_channel(c.points[tx], spec, rng);
    const double ll_tx = log_lik(y, c.points[tx]);
    double best = -1e300;
    std::vector<double> ll(m);
    for (std::size_t x = 0; x < m; ++x) {
      ll[x] = log_lik(y, c.points[x]);
      best = std::max(best, ll[x]);
    }
    double mix = 0.0;
    for (double v : ll) mix += std::exp(v - best);
    const double log_py = best + std::log(mix) - log_m; // up to the same constant
    const double info_bits = (ll_tx - log_py) / std::log(2.0);
    acc_bits += info_bits;
    acc_sq += info_bits * info_bits;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = acc_bits / n;
  const double var = std::max(0.0, acc_sq / n - mean * mean);
  const double half = 1.959963984540054 * std::sqrt(var / n);
  const double cap = std::log2(static_cast<double>(m));
  MiEstimate est;
  est.mi_bits = std::clamp(mean, 0.0, cap);
  est.ci_lo = std::clamp(mean - half, 0.0, cap);
  est.ci_hi = std::clamp(mean + half, 0.0, cap);
  return est;
}

} // namespace tbench::pqam
