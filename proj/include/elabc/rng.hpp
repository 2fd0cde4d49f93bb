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

#include <cstdint>
#include <vector>

#include "elabc/kern.hpp"

// Splittable counter-based random streams. A stream is (key, counter); child
// streams are derived by hashing a tag into the key, so any part of an
// experiment can be re-run in isolation and concurrent workers can own
// disjoint streams without coordination. All draws reduce to the kern fills,
// which are backend bit-identical.

namespace elabc {

struct RngStream {
  std::uint64_t key = 0;
  std::uint64_t ctr = 0;

  RngStream() = default;
  explicit RngStream(std::uint64_t k) : key(k) {}

  /// Child stream with a fresh counter; deterministic in (key, tag).
  RngStream child(std::uint64_t tag) const { return RngStream(kern::derive_key(key, tag)); }

  std::uint64_t next_u64() { return kern::mix64(key, ctr++); }

  double uniform() {
    double v;
    kern::fill_uniform(key, ctr, 1, &v);
    ctr += 1;
    return v;
  }

  double normal() {
    double v;
    kern::fill_normal(key, ctr, 1, &v);
    ctr += 2;  // Box-Muller pairs consume two counters
    return v;
  }

  void fill_uniform(std::size_t n, double* out) {
    kern::fill_uniform(key, ctr, n, out);
    ctr += n;
  }

  void fill_normal(std::size_t n, double* out) {
    kern::fill_normal(key, ctr, n, out);
    ctr += 2 * ((n + 1) / 2);
  }

  /// Packed Bernoulli(p) bits; consumes one counter per bit.
  void fill_bernoulli_words(double p, std::size_t nbits, std::uint64_t* words) {
    kern::fill_bernoulli_words(key, ctr, kern::bernoulli_threshold(p), nbits, words);
    ctr += nbits;
  }
};

/// Poisson draw (Knuth's product method; fine for the rates used here).
int poisson(RngStream& s, double lambda);

/// Gamma(shape, 1) draw, shape > 0 (Marsaglia-Tsang).
double gamma_draw(RngStream& s, double shape);

/// Beta(a, b) draw.
double beta_draw(RngStream& s, double a, double b);

}  // namespace elabc
