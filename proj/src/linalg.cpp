// SPDX-License-Identifier: Apache-2.0
#include "tbench/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbench {

// One-sided Jacobi: orthogonalize column pairs of A until all inner products
// are negligible; the column norms are then the singular values.
std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("empty matrix");
  ComplexMatrix a = m;
  const std::size_t n = a.cols;
  const std::size_t rows = a.rows;

  auto col = [&](std::size_t j) { return a.data.data() + j * rows; };

  const double eps = 1e-14;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        std::complex<double> cpq{0.0, 0.0};
        double app = 0.0;
        double aqq = 0.0;
        const auto* cp = col(p);
        const auto* cq = col(q);
        for (std::size_t r = 0; r < rows; ++r) {
          cpq += std::conj(cp[r]) * cq[r];
          app += std::norm(cp[r]);
          aqq += std::norm(cq[r]);
        }
        const double mag = std::abs(cpq);
        if (mag <= eps * std::sqrt(app * aqq)) continue;
        off += mag;

        // Rotate so the (p,q) inner product vanishes.
        const std::complex<double> phase = cpq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        auto* wp = col(p);
        auto* wq = col(q);
        for (std::size_t r = 0; r < rows; ++r) {
          const std::complex<double> vp = wp[r];
          const std::complex<double> vq = wq[r];
          wp[r] = c * vp - s * std::conj(phase) * vq;
          wq[r] = s * phase * vp + c * vq;
        }
      }
    }
    if (off == 0.0) break;
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double nrm = 0.0;
    const auto* cj = col(j);
    for (std::size_t r = 0; r < rows; ++r) nrm += std::norm(cj[r]);
    sv[j] = std::sqrt(nrm);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double condition_number(const ComplexMatrix& m) {
  const std::vector<double> sv = singular_values(m);
  if (sv.back() <= 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / sv.back();
}

} // namespace tbench
