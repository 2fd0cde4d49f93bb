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
#include <cstdint>

// Numeric kernels used by the simulation and solver layers.
//
// Every kernel exists twice: a scalar reference implementation and an AVX2
// variant, selected once per process at first use (override with the
// ELABC_KERNELS environment variable, values "scalar" or "avx2", or with
// force_backend()). The two implementations are bit-identical by contract,
// not merely close: reductions are defined over four interleaved
// accumulators combined in a fixed order, fused multiply-adds appear only
// where both sides spell them out, and the transcendental kernels share one
// set of polynomial coefficients. tests/test_kern.cpp asserts equality at
// the byte level, which is what makes serialized experiment output
// independent of the instruction set that produced it.
//
// Random streams are counter-based: element i of a fill depends only on
// (key, ctr0 + i), so fills of any length are random access, reproducible,
// and safe to generate in any block order.

namespace elabc::kern {

enum class Backend { scalar, avx2 };

Backend active_backend();
bool avx2_supported();

/// Force a backend (tests, cross-checking). Throws std::runtime_error if the
/// requested backend is not available on this CPU.
void force_backend(Backend b);

// --- counter RNG primitives --------------------------------------------------

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t splitmix_fin(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Random-access generator word: two finalizer rounds over (key, counter).
constexpr std::uint64_t mix64(std::uint64_t key, std::uint64_t ctr) {
  return splitmix_fin(key + splitmix_fin(ctr + 0x9E3779B97F4A7C15ull));
}

/// Derive a child stream key from a parent key and a tag. Structurally
/// distinct from mix64 so stream keys and stream outputs never alias.
constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag) {
  return splitmix_fin(key ^ splitmix_fin(tag ^ 0xD1B54A32D192ED03ull));
}

// --- dispatched kernels ------------------------------------------------------

/// out[i] = mix64(key, ctr0 + i).
void fill_u64(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out);

/// Uniform doubles strictly inside (0,1): ((word >> 12) + 0.5) * 2^-52.
void fill_uniform(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out);

/// Standard normal draws via the deterministic (non-polar) Box-Muller map.
/// Pair p consumes counters ctr0+2p and ctr0+2p+1; a fill of length n
/// consumes 2*ceil(n/2) counters.
void fill_normal(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out);

/// Threshold for fill_bernoulli_words: round(p * 2^53), clamped to [0, 2^53].
std::uint64_t bernoulli_threshold(double p);

/// Packed Bernoulli bits, LSB-first within each 64-bit word. Bit i is set
/// iff (mix64(key, ctr0+i) >> 11) < thresh53. Consumes one counter per bit;
/// trailing bits of the last word are zero.
void fill_bernoulli_words(std::uint64_t key, std::uint64_t ctr0, std::uint64_t thresh53,
                          std::size_t nbits, std::uint64_t* words);

// --- reductions (fixed 4-accumulator order; see file comment) ---------------

double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_log(const double* x, std::size_t n);

/// One-pass power sums: out[k] = sum_i x[i]^(k+1) for k = 0..3.
void power_sums(const double* x, std::size_t n, double out[4]);

// --- elementwise transforms --------------------------------------------------

void log_array(const double* x, std::size_t n, double* out);
void exp_array(const double* x, std::size_t n, double* out);

/// Squared Euclidean distances from a query point to m points stored
/// column-major (coordinate k of point j at colmaj[k*m + j]).
void sq_dists(const double* colmaj, std::size_t m, std::size_t r, const double* q, double* out);

/// Quantile-function transform of the g-and-k distribution applied to
/// standard normal deviates z:
///   out[i] = A + B * (1 + c*(1-e)/(1+e)) * (1+z^2)^k * z,  e = exp(-g*z).
void gk_transform(const double* z, std::size_t n, double A, double B, double g, double k,
                  double c, double* out);

// --- per-backend entry points (tests call these directly) -------------------

namespace scalar {
void fill_u64(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out);
void fill_uniform(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out);
void fill_normal(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out);
void fill_bernoulli_words(std::uint64_t key, std::uint64_t ctr0, std::uint64_t thresh53,
                          std::size_t nbits, std::uint64_t* words);
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_log(const double* x, std::size_t n);
void power_sums(const double* x, std::size_t n, double out[4]);
void log_array(const double* x, std::size_t n, double* out);
void exp_array(const double* x, std::size_t n, double* out);
void sq_dists(const double* colmaj, std::size_t m, std::size_t r, const double* q, double* out);
void gk_transform(const double* z, std::size_t n, double A, double B, double g, double k,
                  double c, double* out);

// Reference transcendentals shared by the scalar kernels (fdlibm-style).
double log_ref(double x);
double exp_ref(double x);
void sincos_ref(double t, double* s, double* c);
}  // namespace scalar

namespace avx2 {
bool compiled();
void fill_u64(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out);
void fill_uniform(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out);
void fill_normal(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out);
void fill_bernoulli_words(std::uint64_t key, std::uint64_t ctr0, std::uint64_t thresh53,
                          std::size_t nbits, std::uint64_t* words);
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_log(const double* x, std::size_t n);
void power_sums(const double* x, std::size_t n, double out[4]);
void log_array(const double* x, std::size_t n, double* out);
void exp_array(const double* x, std::size_t n, double* out);
void sq_dists(const double* colmaj, std::size_t m, std::size_t r, const double* q, double* out);
void gk_transform(const double* z, std::size_t n, double A, double B, double g, double k,
                  double c, double* out);
}  // namespace avx2

}  // namespace elabc::kern
