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

#include "elabc/errors.hpp"

namespace elabc {

int poisson(RngStream& s, double lambda) {
  if (!(lambda >= 0.0)) throw PreconditionError("poisson rate must be >= 0");
  if (lambda > 500.0) throw PreconditionError("poisson rate too large for product method");
  const double limit = std::exp(-lambda);
  double prod = 1.0;
  int k = -1;
  do {
    prod *= s.uniform();
    ++k;
  } while (prod > limit);
  return k;
}

double gamma_draw(RngStream& s, double shape) {
  if (!(shape > 0.0)) throw PreconditionError("gamma shape must be > 0");
  if (shape < 1.0) {
    const double u = s.uniform();
    return gamma_draw(s, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = s.normal();
    const double f = 1.0 + c * x;
    if (f <= 0.0) continue;
    const double v = f * f * f;
    const double u = s.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double beta_draw(RngStream& s, double a, double b) {
  const double ga = gamma_draw(s, a);
  const double gb = gamma_draw(s, b);
  return ga / (ga + gb);
}

}  // namespace elabc
