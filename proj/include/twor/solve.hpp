#pragma once

#include <cmath>

#include "twor/opcount.hpp"
#include "twor/types.hpp"

namespace twor {

/// Solves A x = b for Hermitian positive-definite A by unpivoted Cholesky.
/// A pivot below 1e-14 of the largest diagonal entry raises
/// SingularMatrixError. Sized for the small (L x L) normal equations of the
/// channel estimator, not as general linear algebra.
inline VecC solve_hermitian(const MatC& a, const VecC& b) {
  const int n = static_cast<int>(a.rows());
  require(a.cols() == n && b.size() == n, "solve_hermitian shape mismatch");

  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i).real());
  const double floor = 1e-14 * max_diag;

  MatC l = MatC::Zero(n, n);
  std::uint64_t muls = 0;
  for (int j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > floor))
      throw SingularMatrixError("Cholesky pivot " + std::to_string(d) +
                                " below positive-definiteness floor");
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      cxd s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / l(j, j).real();
      muls += j + 1;
    }
  }

  // forward then back substitution
  VecC y(n);
  for (int i = 0; i < n; ++i) {
    cxd s = b[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i).real();
  }
  VecC x(n);
  for (int i = n - 1; i >= 0; --i) {
    cxd s = y[i];
    for (int k = i + 1; k < n; ++k) s -= std::conj(l(k, i)) * x[k];
    x[i] = s / l(i, i).real();
  }
  ops::record(ops::Stage::SmallSolve, muls + static_cast<std::uint64_t>(n) * n,
              muls + static_cast<std::uint64_t>(n) * n);
  return x;
}

}  // namespace twor
