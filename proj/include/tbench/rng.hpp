// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace tbench {

// Deterministic counter-based random stream. Identical (seed, stream_id)
// reproduce the identical draw sequence on any platform; distribution
// transforms are implemented here rather than borrowed from <random>,
// whose distributions are implementation-defined.
//
// Each Monte Carlo drop should own its stream, obtained via substream().
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {
    state_ = mix64(seed ^ 0x5851f42d4c957f2dULL);
    state_ = mix64(state_ ^ mix64(stream_id + 0x14057b7ef767814fULL));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Independent child stream; used to give every drop / grid point its own
  // sequence so that parallel evaluation order cannot change results.
  RngStream substream(std::uint64_t id) const {
    return RngStream(seed_, mix64(stream_id_ ^ mix64(id + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer on [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller; the spare value is cached, so draw
  // counts stay deterministic for a given call sequence.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform(); // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Circularly symmetric complex Gaussian, unit variance: CN(0, 1).
  std::complex<double> cnormal() {
    double re = normal() * 0.7071067811865475244;
    double im = normal() * 0.7071067811865475244;
    return {re, im};
  }

  // Poisson by Knuth's product method; means above 500 are split into
  // chunks and summed (Poisson additivity) to avoid exp() underflow.
  std::uint64_t poisson(double mean) {
    if (mean < 0.0) throw std::invalid_argument("poisson: mean must be >= 0");
    std::uint64_t total = 0;
    while (mean > 500.0) {
      total += poisson_knuth(500.0);
      mean -= 500.0;
    }
    return total + poisson_knuth(mean);
  }

 private:
  static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t poisson_knuth(double mean) {
    if (mean == 0.0) return 0;
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace tbench
