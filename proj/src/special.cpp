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

#include "elabc/special.hpp"

#include <cmath>

#include "elabc/errors.hpp"

namespace elabc {

double digamma(double x) {
  if (!(x > 0.0)) throw PreconditionError("digamma requires x > 0");
  double acc = 0.0;
  // psi(x) = psi(x+1) - 1/x until the asymptotic series is accurate.
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli-number tail: B_{2n} / (2n x^{2n}).
  const double series = inv2 * (1.0 / 12.0 -
                        inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                        inv2 * (1.0 / 240.0 -
                        inv2 * (1.0 / 132.0 -
                        inv2 * (691.0 / 32760.0 -
                        inv2 * (1.0 / 12.0)))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("inverse_normal_cdf requires 0 < p < 1");
  const double q = p < 0.5 ? p : 1.0 - p;
  // Starting point: Abramowitz-Stegun 26.2.22 for the upper-tail quantile.
  const double t = std::sqrt(-2.0 * std::log(q));
  double x = -(t - (2.30753 + 0.27061 * t) / (1.0 + t * (0.99229 + 0.04481 * t)));
  // Newton on Phi(x) - q with x <= 0 keeps erfc away from cancellation.
  constexpr double inv_sqrt2pi = 0.3989422804014326779;
  for (int it = 0; it < 4; ++it) {
    const double err = normal_cdf(x) - q;
    const double pdf = inv_sqrt2pi * std::exp(-0.5 * x * x);
    const double step = err / pdf;
    x -= step;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
  }
  return p < 0.5 ? x : -x;
}

double gamma_ratio(double j, double a) {
  return std::exp(std::lgamma(j + a) - std::lgamma(j));
}

}  // namespace elabc
