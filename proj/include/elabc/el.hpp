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
#include <limits>
#include <vector>

// Simplex-constrained empirical likelihood: maximize prod_i (m w_i) over
// weights w on the (m-1)-simplex subject to sum_i w_i h_i = 0, where row i
// of the constraint matrix is the difference between the i-th simulated
// summary and the observed summary. Solved through the Lagrange dual
// equation sum_i h_i / (1 + lambda^T h_i) = 0.

namespace elabc {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

struct ConstraintMatrix {
  std::vector<double> data;  // row-major, m x r
  std::size_t m = 0;
  std::size_t r = 0;

  double at(std::size_t i, std::size_t k) const { return data[i * r + k]; }
  const double* row(std::size_t i) const { return data.data() + i * r; }
};

/// Row i = sim_summaries[i] - obs_summary. Requires m >= 2 and consistent
/// summary lengths.
ConstraintMatrix compute_constraints(const std::vector<std::vector<double>>& sim_summaries,
                                     const std::vector<double>& obs_summary);

struct ELSolution {
  std::vector<double> weights;  // length m; all zeros when infeasible
  std::vector<double> lambda;   // length r; zeros when infeasible
  double mean_log_weight = kLogZero;  // (1/m) sum_i log w_i, nats
  bool feasible = false;
  int iterations = 0;
  double residual_norm = std::numeric_limits<double>::infinity();  // ||sum_i w_i h_i||_inf
};

/// Damped Newton on the dual with Owen's pseudo-log barrier (the quadratic
/// extension of log below 1/m), so the dual objective is defined for every
/// lambda. Infeasible instances (origin outside, or on the boundary of, the
/// convex hull of the rows) come back with feasible=false, zero weights and
/// the -inf sentinel; a feasible-looking instance that fails to reach tol
/// within max_iter throws NonConvergenceError.
ELSolution solve_el(const ConstraintMatrix& H, double tol = 1e-9, int max_iter = 100);

/// (1/m) sum log w_i for feasible solutions, the -inf sentinel otherwise.
double mean_log_weight(const ELSolution& sol);

}  // namespace elabc
