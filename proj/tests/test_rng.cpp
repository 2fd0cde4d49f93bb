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

#include "elabc/rng.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace elabc;

TEST_CASE("streams are deterministic and splittable") {
  RngStream a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // Children depend only on (key, tag), not on the parent's counter.
  RngStream c(123);
  c.next_u64();
  CHECK(a.child(7).key == c.child(7).key);
  CHECK(a.child(7).key != a.child(8).key);
}

TEST_CASE("poisson moments") {
  RngStream s(5);
  for (double lambda : {0.5, 4.0, 40.0, 150.0}) {
    const int n = 20000;
    double mean = 0, var = 0;
    std::vector<int> draws(n);
    for (auto& d : draws) d = poisson(s, lambda);
    for (int d : draws) mean += d;
    mean /= n;
    for (int d : draws) var += (d - mean) * (d - mean);
    var /= n - 1;
    const double se = std::sqrt(lambda / n);
    CHECK(std::abs(mean - lambda) < 5 * se);
    CHECK(var == doctest::Approx(lambda).epsilon(0.1));
  }
  CHECK(poisson(s, 0.0) == 0);
}

TEST_CASE("gamma and beta moments") {
  RngStream s(6);
  for (double shape : {0.5, 1.5, 4.0}) {
    const int n = 40000;
    double mean = 0;
    for (int i = 0; i < n; ++i) mean += gamma_draw(s, shape);
    mean /= n;
    CHECK(mean == doctest::Approx(shape).epsilon(0.05));
  }
  const int n = 40000;
  double mean = 0, m2 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = beta_draw(s, 1.5, 1.5);
    mean += x;
    m2 += x * x;
  }
  mean /= n;
  m2 /= n;
  CHECK(mean == doctest::Approx(0.5).epsilon(0.02));
  // Var Beta(1.5,1.5) = ab/((a+b)^2 (a+b+1)) = 2.25/(9*4) = 0.0625
  CHECK(m2 - mean * mean == doctest::Approx(0.0625).epsilon(0.05));
}
