// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tbench::codedcache {

struct CacheConfig {
  std::uint64_t n_users = 1;     // K
  double cache_size_files = 0.0; // M, files-worth of cache per user
  std::uint64_t n_files = 1;     // N, library size
  std::uint64_t n_antennas = 1;  // L, transmitter antennas
};

inline void validate(const CacheConfig& cfg) {
  if (cfg.n_users < 1 || cfg.n_files < 1 || cfg.n_antennas < 1)
    throw std::invalid_argument("K, N and L must all be >= 1");
  if (cfg.cache_size_files < 0.0 ||
      cfg.cache_size_files > static_cast<double>(cfg.n_files))
    throw std::invalid_argument("cache size must satisfy 0 <= M <= N");
}

// Global caching gain t = K*M/N: extra users servable per transmission.
inline double cc_gain(const CacheConfig& cfg) {
  validate(cfg);
  return static_cast<double>(cfg.n_users) * cfg.cache_size_files /
         static_cast<double>(cfg.n_files);
}

// Broadcast delivery volume shrinks by 1 + t.
inline double rate_reduction_factor(const CacheConfig& cfg) {
  return 1.0 + cc_gain(cfg);
}

// Caching gain is additive with spatial multiplexing: t + L streams.
inline double multiantenna_dof(const CacheConfig& cfg) {
  return cc_gain(cfg) + static_cast<double>(cfg.n_antennas);
}

// Subpacketization of the foundational scheme: C(K, t). Requires integer t.
inline std::uint64_t subpacketization_mn(const CacheConfig& cfg) {
  const double t_real = cc_gain(cfg);
  const double t_round = std::round(t_real);
  if (std::abs(t_real - t_round) > 1e-9)
    throw std::invalid_argument("subpacketization requires integer t = K*M/N");
  const auto t = static_cast<std::uint64_t>(t_round);
  const std::uint64_t k = cfg.n_users;
  if (t > k) throw std::invalid_argument("t cannot exceed K");
  const std::uint64_t r = std::min(t, k - t);
  __uint128_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (k - r + i) / i; // exact at every step
    if (acc > static_cast<__uint128_t>(UINT64_MAX))
      throw std::overflow_error("subpacketization count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

} // namespace tbench::codedcache
