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

#pragma once

#include <cstddef>
#include <vector>

// Dense helpers for the small systems in this codebase (dual Newton steps,
// neighbour-weight KKT systems, summary covariances, regression
// adjustments). Matrices are row-major std::vector<double>.

namespace elabc::linalg {

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// A and b are consumed. Throws SingularMatrixError.
std::vector<double> solve_gauss(std::vector<double> A, std::vector<double> b, std::size_t n);

/// In-place lower Cholesky of a symmetric positive definite matrix.
/// Returns false (leaving A unspecified) if a pivot is not positive.
bool cholesky(std::vector<double>& A, std::size_t n);

/// Solve L L^T x = b given the factor from cholesky().
std::vector<double> cholesky_solve(const std::vector<double>& L, std::vector<double> b,
                                   std::size_t n);

/// log(det) of the original matrix, from its Cholesky factor.
double cholesky_logdet(const std::vector<double>& L, std::size_t n);

/// Solve a symmetric positive semi-definite system, adding an escalating
/// diagonal ridge until the factorization succeeds. Throws
/// SingularMatrixError if even the largest ridge fails.
std::vector<double> solve_spd_ridged(std::vector<double> A, std::vector<double> b, std::size_t n);

}  // namespace elabc::linalg
