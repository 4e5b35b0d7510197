// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tbench/linalg.hpp"
#include "tbench/rng.hpp"

namespace tbench::thz {

// Broadside-facing uniform planar arrays, identical shape on both sides.
struct ArrayConfig {
  std::size_t rows = 1;
  std::size_t cols = 1;
  double delta_t_m = 1e-3; // element (or subarray) separation, transmitter
  double delta_r_m = 1e-3; // separation, receiver
  double fc_hz = 1e12;
  double range_m = 1.0; // boresight distance D

  std::size_t antennas_per_side() const { return rows * cols; }
};

// Free-space spreading loss between isotropic antennas: 20 log10(4 pi d f / c).
double spreading_loss_db(double f_hz, double d_m);

// Molecular absorption for a user-supplied coefficient: 10 log10(e) k d.
double absorption_loss_db(double k_abs_per_m, double d_m);

// D_Ray = n_max * delta_r * delta_t / lambda.
double rayleigh_distance_m(std::size_t n_max, double delta_r_m, double delta_t_m,
                           double lambda_m);
double rayleigh_distance_m(const ArrayConfig& cfg); // lambda from fc, n = rows*cols

// Inverse of the Rayleigh-distance formula at delta_r = delta_t:
// delta = sqrt(D * lambda / n_max).
double optimal_separation_m(double range_m, std::size_t n_max, double lambda_m);

// Exact spherical-wave LoS channel between the two planar arrays:
// H[m][n] = lambda/(4 pi d_mn) * exp(-j 2 pi d_mn / lambda) with elementwise
// distances. Amplitude variation across elements is retained.
//
// Note on tuning: for an r x c planar array the columns become orthogonal
// when each axis satisfies the separation rule with its own element count,
// i.e. delta = sqrt(D * lambda / max(rows, cols)); feeding the total count
// into optimal_separation_m over-shrinks planar arrays.
ComplexMatrix los_channel(const ArrayConfig& cfg);

struct BerPoint {
  double snr_db = 0.0;
  double ber = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t bit_errors = 0;
  std::uint64_t bits = 0;
};

// Uncoded 16-QAM over the SVD eigenchannels of the LoS channel with equal
// power per stream (no water-filling). The grid SNR is the per-stream SNR a
// stream with the mean-square singular value would see; coherent per-side
// beamforming gains enter as an SNR offset.
std::vector<BerPoint> multiplex_ber(const ArrayConfig& cfg,
                                    std::span<const double> snr_grid_db,
                                    std::size_t n_channel_uses, RngStream rng,
                                    double beamforming_gain_db = 0.0);

} // namespace tbench::thz
