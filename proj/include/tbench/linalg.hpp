// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tbench {

// Dense column-major complex matrix, just enough for the LoS-MIMO analysis.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> data; // column-major

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return data[c * rows + r]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return data[c * rows + r];
  }
};

// Singular values in descending order, via one-sided Jacobi rotations.
std::vector<double> singular_values(const ComplexMatrix& m);

double condition_number(const ComplexMatrix& m);

} // namespace tbench
