// Copyright 2026 The elabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "elabc/linalg.hpp"

#include <cmath>
#include <utility>

#include "elabc/errors.hpp"

namespace elabc::linalg {

std::vector<double> solve_gauss(std::vector<double> A, std::vector<double> b, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    double best = std::abs(A[c * n + c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double v = std::abs(A[r * n + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best)) {
      throw SingularMatrixError("singular matrix in solve_gauss");
    }
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[c * n + j], A[piv * n + j]);
      std::swap(b[c], b[piv]);
    }
    const double inv = 1.0 / A[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = A[r * n + c] * inv;
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) A[r * n + j] -= f * A[c * n + j];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = b[ri];
    for (std::size_t j = ri + 1; j < n; ++j) s -= A[ri * n + j] * x[j];
    x[ri] = s / A[ri * n + ri];
  }
  return x;
}

bool cholesky(std::vector<double>& A, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    double d = A[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= A[j * n + k] * A[j * n + k];
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double lj = std::sqrt(d);
    A[j * n + j] = lj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = A[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= A[i * n + k] * A[j * n + k];
      A[i * n + j] = s / lj;
    }
    for (std::size_t k = j + 1; k < n; ++k) A[j * n + k] = 0.0;
  }
  return true;
}

std::vector<double> cholesky_solve(const std::vector<double>& L, std::vector<double> b,
                                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= L[i * n + k] * b[k];
    b[i] = s / L[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= L[k * n + ii] * b[k];
    b[ii] = s / L[ii * n + ii];
  }
  return b;
}

double cholesky_logdet(const std::vector<double>& L, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::log(L[i * n + i]);
  return 2.0 * s;
}

std::vector<double> solve_spd_ridged(std::vector<double> A, std::vector<double> b,
                                     std::size_t n) {
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(A[i * n + i]));
  if (scale == 0.0) scale = 1.0;
  for (double ridge = 0.0; ridge <= 1e-4; ridge = (ridge == 0.0 ? 1e-12 : ridge * 100.0)) {
    std::vector<double> C = A;
    for (std::size_t i = 0; i < n; ++i) C[i * n + i] += ridge * scale;
    if (cholesky(C, n)) return cholesky_solve(C, b, n);
  }
  throw SingularMatrixError("solve_spd_ridged: matrix not factorizable");
}

}  // namespace elabc::linalg
