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

namespace elabc {

/// Digamma function, x > 0, absolute accuracy better than 1e-12
/// (upward recurrence into the asymptotic regime, then the Bernoulli series).
double digamma(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile, 0 < p < 1; accurate to ~1e-13 relative
/// (tail-series start + Newton on the erfc-based CDF).
double inverse_normal_cdf(double p);

/// Gamma(j + a) / Gamma(j) for j > 0, j + a > 0.
double gamma_ratio(double j, double a);

}  // namespace elabc
