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

#include "elabc/el.hpp"

#include <algorithm>
#include <cmath>

#include "elabc/errors.hpp"
#include "elabc/kern.hpp"
#include "elabc/linalg.hpp"

namespace elabc {

namespace {

constexpr double kLambdaCap = 1e8;

// Owen's pseudo-log: log(d) for d >= eps, quadratic continuation below.
// Value, first and second derivative, matched at eps.
struct PseudoLog {
  double eps;
  double log_eps;

  explicit PseudoLog(double e) : eps(e), log_eps(std::log(e)) {}

  double val(double d) const {
    if (d >= eps) return std::log(d);
    return log_eps - 1.5 + 2.0 * d / eps - 0.5 * (d / eps) * (d / eps);
  }
  double d1(double d) const {
    if (d >= eps) return 1.0 / d;
    return (2.0 - d / eps) / eps;
  }
  double d2(double d) const {
    if (d >= eps) return -1.0 / (d * d);
    return -1.0 / (eps * eps);
  }
};

struct DualState {
  double f;                  // -sum log*(d_i)
  std::vector<double> grad;  // -sum h_i log*'(d_i)
  std::vector<double> hess;  // +sum h_i h_i^T * (-log*''(d_i)), SPD
};

void eval_dual(const ConstraintMatrix& H, const std::vector<double>& lambda,
               const PseudoLog& pl, std::vector<double>& d, DualState& st, bool want_hess) {
  const std::size_t m = H.m, r = H.r;
  st.f = 0.0;
  std::fill(st.grad.begin(), st.grad.end(), 0.0);
  if (want_hess) std::fill(st.hess.begin(), st.hess.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* h = H.row(i);
    double di = 1.0;
    for (std::size_t k = 0; k < r; ++k) di += lambda[k] * h[k];
    d[i] = di;
    st.f -= pl.val(di);
    const double g1 = pl.d1(di);
    for (std::size_t k = 0; k < r; ++k) st.grad[k] -= h[k] * g1;
    if (want_hess) {
      const double c = -pl.d2(di);
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = k; l < r; ++l) st.hess[k * r + l] += c * h[k] * h[l];
      }
    }
  }
  if (want_hess) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < k; ++l) st.hess[k * r + l] = st.hess[l * r + k];
    }
  }
}

// ||(1/m) sum_i h_i / d_i||_inf; only meaningful when all d_i > 0.
double primal_residual(const ConstraintMatrix& H, const std::vector<double>& d) {
  const std::size_t m = H.m, r = H.r;
  double worst = 0.0;
  for (std::size_t k = 0; k < r; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += H.at(i, k) / d[i];
    worst = std::max(worst, std::abs(s) / double(m));
  }
  return worst;
}

ELSolution infeasible_result(std::size_t m, std::size_t r, int iters) {
  ELSolution sol;
  sol.weights.assign(m, 0.0);
  sol.lambda.assign(r, 0.0);
  sol.mean_log_weight = kLogZero;
  sol.feasible = false;
  sol.iterations = iters;
  return sol;
}

}  // namespace

ConstraintMatrix compute_constraints(const std::vector<std::vector<double>>& sim_summaries,
                                     const std::vector<double>& obs_summary) {
  if (sim_summaries.size() < 2) {
    throw PreconditionError("compute_constraints: need at least m = 2 replicates");
  }
  const std::size_t r = obs_summary.size();
  if (r == 0) throw DimensionError("compute_constraints: empty observed summary");
  ConstraintMatrix H;
  H.m = sim_summaries.size();
  H.r = r;
  H.data.resize(H.m * r);
  for (std::size_t i = 0; i < H.m; ++i) {
    if (sim_summaries[i].size() != r) {
      throw DimensionError("compute_constraints: summary length mismatch");
    }
    for (std::size_t k = 0; k < r; ++k) H.data[i * r + k] = sim_summaries[i][k] - obs_summary[k];
  }
  return H;
}

ELSolution solve_el(const ConstraintMatrix& H, double tol, int max_iter) {
  if (H.m < 2 || H.r == 0 || H.data.size() != H.m * H.r) {
    throw DimensionError("solve_el: malformed constraint matrix");
  }
  if (!(tol > 0.0)) throw PreconditionError("solve_el: tol must be positive");
  const std::size_t m = H.m, r = H.r;
  const PseudoLog pl(1.0 / double(m));

  std::vector<double> lambda(r, 0.0), d(m);
  DualState st;
  st.grad.resize(r);
  st.hess.resize(r * r);

  // Converge to half the requested tolerance; the final renormalization of
  // the weights then keeps every published invariant within tol.
  const double target = 0.5 * tol;
  int iter = 0;
  bool converged = false;
  bool diverged = false;

  eval_dual(H, lambda, pl, d, st, true);
  for (; iter < max_iter; ++iter) {
    if (*std::min_element(d.begin(), d.end()) > 0.0 && primal_residual(H, d) <= target) {
      converged = true;
      break;
    }
    double lam_norm = 0.0;
    for (double l : lambda) lam_norm = std::max(lam_norm, std::abs(l));
    if (lam_norm > kLambdaCap) {
      diverged = true;
      break;
    }

    std::vector<double> rhs(r);
    for (std::size_t k = 0; k < r; ++k) rhs[k] = -st.grad[k];
    std::vector<double> step = linalg::solve_spd_ridged(st.hess, rhs, r);

    double slope = 0.0;
    for (std::size_t k = 0; k < r; ++k) slope += st.grad[k] * step[k];
    if (slope >= 0.0) {
      // Ridge distortion produced a non-descent direction; fall back to
      // steepest descent scaled to the step's magnitude.
      double snorm = 0.0, gnorm = 0.0;
      for (std::size_t k = 0; k < r; ++k) {
        snorm += step[k] * step[k];
        gnorm += st.grad[k] * st.grad[k];
      }
      const double scale = std::sqrt(snorm / std::max(gnorm, 1e-300));
      for (std::size_t k = 0; k < r; ++k) step[k] = -st.grad[k] * scale;
      slope = 0.0;
      for (std::size_t k = 0; k < r; ++k) slope += st.grad[k] * step[k];
    }

    const double f0 = st.f;
    std::vector<double> trial(r);
    double t = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt, t *= 0.5) {
      for (std::size_t k = 0; k < r; ++k) trial[k] = lambda[k] + t * step[k];
      eval_dual(H, trial, pl, d, st, false);
      if (st.f <= f0 + 1e-4 * t * slope) {
        lambda = trial;
        moved = true;
        break;
      }
    }
    if (!moved) break;  // stalled; classified below
    eval_dual(H, lambda, pl, d, st, true);
  }

  if (!converged) {
    double lam_norm = 0.0;
    for (double l : lambda) lam_norm = std::max(lam_norm, std::abs(l));
    if (diverged || lam_norm > 1e6) return infeasible_result(m, r, iter);
    throw NonConvergenceError("solve_el: no convergence within max_iter on a feasible-looking instance");
  }

  // Feasible candidates must put every weight strictly inside the simplex:
  // d_i = 1/(m w_i) > 1/m, and the weights must actually sum to one. An
  // instance whose dual ran off along a recession direction satisfies the
  // gradient test with d_i -> inf and sum(w) -> 0, so this check doubles as
  // the boundary/outside-hull detector.
  const double dmin = *std::min_element(d.begin(), d.end());
  std::vector<double> w(m);
  double sumw = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = 1.0 / (double(m) * d[i]);
    sumw += w[i];
  }
  if (dmin <= 1.0 / double(m) || std::abs(sumw - 1.0) > 1e-6) {
    return infeasible_result(m, r, iter);
  }
  for (std::size_t i = 0; i < m; ++i) w[i] /= sumw;

  ELSolution sol;
  sol.weights = std::move(w);
  sol.lambda = lambda;
  sol.feasible = true;
  sol.iterations = iter;
  sol.mean_log_weight = kern::sum_log(sol.weights.data(), m) / double(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = 1.0 / (double(m) * sol.weights[i]);
  sol.residual_norm = primal_residual(H, d);  // equals ||sum_i w_i h_i||_inf
  return sol;
}

double mean_log_weight(const ELSolution& sol) {
  return sol.feasible ? sol.mean_log_weight : kLogZero;
}

}  // namespace elabc
