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
#include <vector>

#include "doctest.h"
#include "elabc/errors.hpp"
#include "elabc/rng.hpp"

using namespace elabc;

TEST_CASE("gaussian elimination solves and detects singularity") {
  // 2x2 with known inverse.
  auto x = linalg::solve_gauss({2, 1, 1, 3}, {5, 10}, 2);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(3.0));

  // Random well-conditioned systems: residual small.
  RngStream s(77);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 1 + rep % 8;
    std::vector<double> A(n * n), b(n);
    s.fill_uniform(n * n, A.data());
    s.fill_uniform(n, b.data());
    for (std::size_t i = 0; i < n; ++i) A[i * n + i] += double(n);
    const auto sol = linalg::solve_gauss(A, b, n);
    for (std::size_t i = 0; i < n; ++i) {
      double r = -b[i];
      for (std::size_t j = 0; j < n; ++j) r += A[i * n + j] * sol[j];
      CHECK(std::abs(r) < 1e-10);
    }
  }

  CHECK_THROWS_AS(linalg::solve_gauss({1, 2, 2, 4}, {1, 2}, 2), SingularMatrixError);
}

TEST_CASE("cholesky factor, solve, logdet") {
  // A = L L^T with L = [[2,0],[1,3]] -> A = [[4,2],[2,10]], det = 36.
  std::vector<double> A{4, 2, 2, 10};
  auto C = A;
  REQUIRE(linalg::cholesky(C, 2));
  CHECK(C[0] == doctest::Approx(2.0));
  CHECK(C[2] == doctest::Approx(1.0));
  CHECK(C[3] == doctest::Approx(3.0));
  CHECK(linalg::cholesky_logdet(C, 2) == doctest::Approx(std::log(36.0)).epsilon(1e-13));

  auto x = linalg::cholesky_solve(C, {8, 24}, 2);
  CHECK(4 * x[0] + 2 * x[1] == doctest::Approx(8.0));
  CHECK(2 * x[0] + 10 * x[1] == doctest::Approx(24.0));

  std::vector<double> notspd{1, 2, 2, 1};
  CHECK_FALSE(linalg::cholesky(notspd, 2));
}

TEST_CASE("ridged spd solve handles rank deficiency") {
  // Rank-1 PSD matrix; plain cholesky fails, ridge succeeds and the
  // solution stays consistent on the range of A.
  std::vector<double> A{1, 1, 1, 1};
  auto x = linalg::solve_spd_ridged(A, {2, 2}, 2);
  CHECK(x[0] + x[1] == doctest::Approx(2.0).epsilon(1e-6));
}
