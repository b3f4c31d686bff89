#pragma once

#include "sterngf/exact/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace sterngf {

using RatMatrix = std::vector<std::vector<BigRat>>;
using RatVector = std::vector<BigRat>;

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

/// Solves A x = b exactly by Gaussian elimination, pivoting on the entry of
/// largest absolute value in each column.
inline RatVector linsolve(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("linsolve: dimension mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("linsolve: matrix is not square");
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    BigRat best = 0;
    for (std::size_t i = k; i < n; ++i) {
      BigRat m = boost::multiprecision::abs(a[i][k]);
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (piv == n) throw SingularMatrixError();
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      BigRat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigRat acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace sterngf
