// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tbench/rng.hpp"

namespace tbench::pqam {

// A labeled constellation with unit average symbol energy.
struct Constellation {
  std::vector<std::complex<double>> points;
  std::vector<std::uint32_t> bit_labels; // label of points[i]
  std::size_t bits_per_symbol = 0;
};

// M points on Gamma concentric rings, M/Gamma equally spaced phases per ring.
// Ring radii are proportional to the odd integers 1, 3, ..., 2*Gamma-1; that
// choice makes the peak-to-average ratio 3(2G-1)/(2G+1) independent of M
// (see docs/pqam_design.md for the derivation). Points are stored ring-major:
// index = ring * (M/Gamma) + phase slot.
struct PqamConstellation : Constellation {
  std::size_t order = 0; // M
  std::size_t rings = 0; // Gamma
  std::size_t phases_per_ring = 0;
  double inter_ring_phase_offset_rad = 0.0;
  std::vector<double> ring_radii;          // normalized, ascending
  std::vector<std::size_t> ring_of;        // per point
  std::vector<std::size_t> phase_index_of; // per point
};

// Valid Gamma values are the powers of two from 1 to M (M itself a power of
// two >= 2). Gamma = 1 is phase-shift keying; Gamma = M/2 has two phases per
// ring (amplitude-shift structure).
PqamConstellation generate(std::size_t order, std::size_t rings,
                           double inter_ring_phase_offset_rad = 0.0);

// Square QAM baseline with per-axis Gray labeling (M a power of 4).
Constellation make_square_qam(std::size_t order);

// max |x|^2 / mean |x|^2 over the point set.
double papr(const Constellation& c);

// Closed form for PQAM: 3(2G-1)/(2G+1).
double papr_closed_form(std::size_t rings);

// Memoryless phase-noise channel: y = x e^{j phi} + n, phi ~ N(0, sigma_phi_sq),
// n ~ CN(0, sigma_n^2) with sigma_n^2 = 10^(-snr/10) against unit symbol energy.
struct PnChannelSpec {
  double sigma_phi_sq = 0.0; // rad^2
  double snr_db = 0.0;
};

double noise_variance(const PnChannelSpec& spec);

std::complex<double> pn_channel(std::complex<double> x, const PnChannelSpec& spec,
                                RngStream& rng);

// Minimum-distance detection; ties break to the lowest index.
std::size_t detect_euclidean(std::complex<double> y, const Constellation& c);

// Decoupled polar detection: ring by nearest amplitude, then phase by nearest
// grid phase on that ring. Residuals are weighted by their small-noise
// variances (amplitude: sigma_n^2/2; phase: sigma_phi_sq + sigma_n^2/(2 r^2)),
// which leaves the two decisions independent.
std::size_t detect_polar(std::complex<double> y, const PqamConstellation& c,
                         const PnChannelSpec& spec);

enum class Detector { euclidean, polar };

struct SerPoint {
  double snr_db = 0.0;
  double sigma_phi_sq = 0.0;
  double ser = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t errors = 0;
  std::uint64_t trials = 0;
};

// Monte Carlo symbol error rate over a (sigma_phi_sq, snr) grid. Points that
// share sigma_phi_sq reuse one substream so SNR sweeps are matched-seed.
std::vector<SerPoint> ser_sweep(const PqamConstellation& c, Detector det,
                                const std::vector<PnChannelSpec>& grid,
                                std::size_t n_symbols, RngStream rng);

// Same sweep for an unstructured constellation (Euclidean detection only).
std::vector<SerPoint> ser_sweep(const Constellation& c,
                                const std::vector<PnChannelSpec>& grid,
                                std::size_t n_symbols, RngStream rng);

// Monte Carlo mutual information I(X;Y) in bits/symbol for equiprobable
// inputs. The phase-noise marginal p(y|x) is integrated by quadrature.
double mi_estimate(const Constellation& c, const PnChannelSpec& spec,
                   std::size_t n_samples, RngStream rng);

struct MiEstimate {
  double mi_bits = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

// Same estimate with a normal-approximation 95% interval from the sample
// variance of the information density.
MiEstimate mi_estimate_with_ci(const Constellation& c, const PnChannelSpec& spec,
                               std::size_t n_samples, RngStream rng);

} // namespace tbench::pqam
