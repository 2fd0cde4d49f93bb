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

// AVX2 kernel variants. Each function reproduces the scalar reference in
// kern_scalar.cpp bit-for-bit: identical operation order per element,
// identical 4-lane reduction structure, and loop tails delegated to the
// scalar twin. Divisions and square roots are IEEE-exact on both paths;
// fused multiply-adds appear only where the scalar code spells out
// std::fma.

#include "elabc/kern.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "kern_coeffs.hpp"

namespace elabc::kern::avx2 {

namespace {

using std::uint64_t;
namespace cf = elabc::kern::coeffs;

inline __m256i mullo64(__m256i a, __m256i b) {
  // 64x64 -> low 64 via three 32x32 products (AVX2 has no vpmullq).
  const __m256i lo_hi = _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32));
  const __m256i hi_lo = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  const __m256i cross = _mm256_slli_epi64(_mm256_add_epi64(lo_hi, hi_lo), 32);
  return _mm256_add_epi64(_mm256_mul_epu32(a, b), cross);
}

inline __m256i splitmix_fin4(__m256i z) {
  z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
  z = mullo64(z, _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ull)));
  z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
  z = mullo64(z, _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBull)));
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

inline __m256i mix64x4(__m256i key, __m256i ctr) {
  const __m256i g = _mm256_set1_epi64x(static_cast<long long>(0x9E3779B97F4A7C15ull));
  return splitmix_fin4(_mm256_add_epi64(key, splitmix_fin4(_mm256_add_epi64(ctr, g))));
}

inline __m256i counters(uint64_t c0) {
  return _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(c0)),
                          _mm256_setr_epi64x(0, 1, 2, 3));
}

inline __m256d to_unit4(__m256i w) {
  const __m256i mant = _mm256_or_si256(_mm256_srli_epi64(w, 12),
                                       _mm256_set1_epi64x(0x4330000000000000ll));
  const __m256d d = _mm256_sub_pd(_mm256_castsi256_pd(mant), _mm256_set1_pd(4503599627370496.0));
  return _mm256_mul_pd(_mm256_add_pd(d, _mm256_set1_pd(0.5)), _mm256_set1_pd(0x1p-52));
}

// Exact double(k) for small signed 64-bit lane values.
inline __m256d i64_to_f64(__m256i k) {
  const __m256i magic = _mm256_set1_epi64x(0x4338000000000000ll);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(k, magic)),
                       _mm256_set1_pd(6755399441055744.0));
}

inline __m256d log4(__m256d x) {
  const __m256i ix = _mm256_castpd_si256(x);
  __m256i hx = _mm256_srli_epi64(ix, 32);
  hx = _mm256_add_epi64(hx, _mm256_set1_epi64x(0x3ff00000ll - 0x3fe6a09ell));
  const __m256i k64 =
      _mm256_sub_epi64(_mm256_srli_epi64(hx, 20), _mm256_set1_epi64x(0x3ffll));
  hx = _mm256_add_epi64(_mm256_and_si256(hx, _mm256_set1_epi64x(0x000fffffll)),
                        _mm256_set1_epi64x(0x3fe6a09ell));
  const __m256i bits = _mm256_or_si256(_mm256_slli_epi64(hx, 32),
                                       _mm256_and_si256(ix, _mm256_set1_epi64x(0xffffffffll)));
  const __m256d xs = _mm256_castsi256_pd(bits);

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d f = _mm256_sub_pd(xs, one);
  const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(0.5), f), f);
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  __m256d t1 = _mm256_mul_pd(w, _mm256_set1_pd(cf::kLg6));
  t1 = _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(cf::kLg4), t1));
  t1 = _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(cf::kLg2), t1));
  __m256d t2 = _mm256_mul_pd(w, _mm256_set1_pd(cf::kLg7));
  t2 = _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(cf::kLg5), t2));
  t2 = _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(cf::kLg3), t2));
  t2 = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kLg1), t2));
  const __m256d R = _mm256_add_pd(t2, t1);
  const __m256d dk = i64_to_f64(k64);

  // dk*Ln2Hi - ((hfsq - (s*(hfsq+R) + dk*Ln2Lo)) - f)
  const __m256d inner = _mm256_add_pd(_mm256_mul_pd(s, _mm256_add_pd(hfsq, R)),
                                      _mm256_mul_pd(dk, _mm256_set1_pd(cf::kLn2Lo)));
  const __m256d mid = _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f);
  return _mm256_sub_pd(_mm256_mul_pd(dk, _mm256_set1_pd(cf::kLn2Hi)), mid);
}

inline __m256d exp4(__m256d x) {
  const __m256d kd = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(cf::kInvLn2)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d hi = _mm256_sub_pd(x, _mm256_mul_pd(kd, _mm256_set1_pd(cf::kLn2Hi)));
  const __m256d lo = _mm256_mul_pd(kd, _mm256_set1_pd(cf::kLn2Lo));
  const __m256d r = _mm256_sub_pd(hi, lo);
  const __m256d t = _mm256_mul_pd(r, r);
  __m256d p = _mm256_mul_pd(t, _mm256_set1_pd(cf::kExpP5));
  p = _mm256_mul_pd(t, _mm256_add_pd(_mm256_set1_pd(cf::kExpP4), p));
  p = _mm256_mul_pd(t, _mm256_add_pd(_mm256_set1_pd(cf::kExpP3), p));
  p = _mm256_mul_pd(t, _mm256_add_pd(_mm256_set1_pd(cf::kExpP2), p));
  p = _mm256_mul_pd(t, _mm256_add_pd(_mm256_set1_pd(cf::kExpP1), p));
  const __m256d c = _mm256_sub_pd(r, p);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quot = _mm256_div_pd(_mm256_mul_pd(r, c), _mm256_sub_pd(_mm256_set1_pd(2.0), c));
  const __m256d y = _mm256_sub_pd(one, _mm256_sub_pd(_mm256_sub_pd(lo, quot), hi));

  const __m128i k32 = _mm256_cvtpd_epi32(kd);
  const __m256i k64 = _mm256_cvtepi32_epi64(k32);
  const __m256i scale_bits =
      _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(y, _mm256_castsi256_pd(scale_bits));
}

inline void sincos4(__m256d t, __m256d* sout, __m256d* cout) {
  const __m256d qd = _mm256_round_pd(_mm256_mul_pd(t, _mm256_set1_pd(cf::kTwoOverPi)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d r = _mm256_sub_pd(_mm256_sub_pd(t, _mm256_mul_pd(qd, _mm256_set1_pd(cf::kPiO2Hi))),
                                  _mm256_mul_pd(qd, _mm256_set1_pd(cf::kPiO2Lo)));
  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(qd));

  const __m256d z = _mm256_mul_pd(r, r);
  __m256d ps = _mm256_mul_pd(z, _mm256_set1_pd(cf::kS6));
  ps = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kS5), ps));
  ps = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kS4), ps));
  ps = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kS3), ps));
  ps = _mm256_add_pd(_mm256_set1_pd(cf::kS2), ps);
  const __m256d sk = _mm256_add_pd(
      r, _mm256_mul_pd(_mm256_mul_pd(r, z),
                       _mm256_add_pd(_mm256_set1_pd(cf::kS1), _mm256_mul_pd(z, ps))));
  __m256d pc = _mm256_mul_pd(z, _mm256_set1_pd(cf::kC6));
  pc = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kC5), pc));
  pc = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kC4), pc));
  pc = _mm256_mul_pd(z, _mm256_add_pd(_mm256_set1_pd(cf::kC3), pc));
  pc = _mm256_add_pd(_mm256_set1_pd(cf::kC2), pc);
  const __m256d ck = _mm256_add_pd(
      _mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(0.5), z)),
      _mm256_mul_pd(_mm256_mul_pd(z, z),
                    _mm256_add_pd(_mm256_set1_pd(cf::kC1), _mm256_mul_pd(z, pc))));

  // Quadrant map (q mod 4): sin <- [sk, ck, -sk, -ck], cos <- [ck, -sk, -ck, sk].
  const __m256i one64 = _mm256_set1_epi64x(1);
  const __m256i two64 = _mm256_set1_epi64x(2);
  const __m256i swap64 = _mm256_cmpeq_epi64(_mm256_and_si256(q, one64), one64);
  const __m256d swap = _mm256_castsi256_pd(swap64);
  const __m256d sin_base = _mm256_blendv_pd(sk, ck, swap);
  const __m256d cos_base = _mm256_blendv_pd(ck, sk, swap);
  const __m256d signbit = _mm256_set1_pd(-0.0);
  const __m256i sin_neg64 = _mm256_cmpeq_epi64(_mm256_and_si256(q, two64), two64);
  const __m256i cos_neg64 = _mm256_cmpeq_epi64(
      _mm256_and_si256(_mm256_add_epi64(q, one64), two64), two64);
  const __m256d sin_sign = _mm256_and_pd(_mm256_castsi256_pd(sin_neg64), signbit);
  const __m256d cos_sign = _mm256_and_pd(_mm256_castsi256_pd(cos_neg64), signbit);
  *sout = _mm256_xor_pd(sin_base, sin_sign);
  *cout = _mm256_xor_pd(cos_base, cos_sign);
}

inline double hsum(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d v = _mm_add_pd(lo, hi);  // (a0+a2, a1+a3)
  return _mm_cvtsd_f64(v) + _mm_cvtsd_f64(_mm_unpackhi_pd(v, v));
}

}  // namespace

bool compiled() { return true; }

void fill_u64(uint64_t key, uint64_t ctr0, std::size_t n, uint64_t* out) {
  const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key));
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    const __m256i w = mix64x4(k, counters(ctr0 + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), w);
  }
  if (nb < n) scalar::fill_u64(key, ctr0 + nb, n - nb, out + nb);
}

void fill_uniform(uint64_t key, uint64_t ctr0, std::size_t n, double* out) {
  const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key));
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    _mm256_storeu_pd(out + i, to_unit4(mix64x4(k, counters(ctr0 + i))));
  }
  if (nb < n) scalar::fill_uniform(key, ctr0 + nb, n - nb, out + nb);
}

void fill_normal(uint64_t key, uint64_t ctr0, std::size_t n, double* out) {
  const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key));
  const __m256d twopi = _mm256_set1_pd(cf::kTwoPi);
  const __m256d neg2 = _mm256_set1_pd(-2.0);
  std::size_t i = 0;
  // Blocks of 8 outputs = 4 Box-Muller pairs.
  for (; i + 8 <= n; i += 8) {
    const __m256d a = to_unit4(mix64x4(k, counters(ctr0 + i)));      // counters i..i+3
    const __m256d b = to_unit4(mix64x4(k, counters(ctr0 + i + 4)));  // counters i+4..i+7
    // Deinterleave into u1 (even counters) and u2 (odd counters), in order.
    const __m256d ul = _mm256_unpacklo_pd(a, b);  // (w0, w4, w2, w6)
    const __m256d uh = _mm256_unpackhi_pd(a, b);  // (w1, w5, w3, w7)
    const __m256d u1 = _mm256_permute4x64_pd(ul, _MM_SHUFFLE(3, 1, 2, 0));
    const __m256d u2 = _mm256_permute4x64_pd(uh, _MM_SHUFFLE(3, 1, 2, 0));
    const __m256d rad = _mm256_sqrt_pd(_mm256_mul_pd(neg2, log4(u1)));
    __m256d s, c;
    sincos4(_mm256_mul_pd(twopi, u2), &s, &c);
    const __m256d rc = _mm256_mul_pd(rad, c);
    const __m256d rs = _mm256_mul_pd(rad, s);
    const __m256d lo = _mm256_unpacklo_pd(rc, rs);  // (x0,y0,x2,y2)
    const __m256d hi = _mm256_unpackhi_pd(rc, rs);  // (x1,y1,x3,y3)
    _mm256_storeu_pd(out + i, _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(out + i + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
  }
  if (i < n) scalar::fill_normal(key, ctr0 + i, n - i, out + i);
}

void fill_bernoulli_words(uint64_t key, uint64_t ctr0, uint64_t thresh53, std::size_t nbits,
                          uint64_t* words) {
  const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key));
  const __m256i thr = _mm256_set1_epi64x(static_cast<long long>(thresh53));
  const std::size_t full_words = nbits / 64;
  for (std::size_t w = 0; w < full_words; ++w) {
    uint64_t bits = 0;
    const uint64_t base = ctr0 + 64 * w;
    for (int blk = 0; blk < 16; ++blk) {
      const __m256i draw = _mm256_srli_epi64(mix64x4(k, counters(base + 4 * blk)), 11);
      const int m4 = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(thr, draw)));
      bits |= static_cast<uint64_t>(m4) << (4 * blk);
    }
    words[w] = bits;
  }
  const std::size_t done = full_words * 64;
  if (done < nbits) {
    scalar::fill_bernoulli_words(key, ctr0 + done, thresh53, nbits - done, words + full_words);
  }
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (std::size_t i = nb; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  }
  double s = hsum(acc);
  for (std::size_t i = nb; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double sum_log(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) acc = _mm256_add_pd(acc, log4(_mm256_loadu_pd(x + i)));
  double s = hsum(acc);
  for (std::size_t i = nb; i < n; ++i) s += scalar::log_ref(x[i]);
  return s;
}

void power_sums(const double* x, std::size_t n, double out[4]) {
  __m256d a1 = _mm256_setzero_pd(), a2 = _mm256_setzero_pd();
  __m256d a3 = _mm256_setzero_pd(), a4 = _mm256_setzero_pd();
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d v2 = _mm256_mul_pd(v, v);
    const __m256d v3 = _mm256_mul_pd(v2, v);
    const __m256d v4 = _mm256_mul_pd(v2, v2);
    a1 = _mm256_add_pd(a1, v);
    a2 = _mm256_add_pd(a2, v2);
    a3 = _mm256_add_pd(a3, v3);
    a4 = _mm256_add_pd(a4, v4);
  }
  double t1 = hsum(a1), t2 = hsum(a2), t3 = hsum(a3), t4 = hsum(a4);
  for (std::size_t i = nb; i < n; ++i) {
    const double v = x[i];
    const double v2 = v * v;
    t1 += v;
    t2 += v2;
    t3 += v2 * v;
    t4 += v2 * v2;
  }
  out[0] = t1;
  out[1] = t2;
  out[2] = t3;
  out[3] = t4;
}

void log_array(const double* x, std::size_t n, double* out) {
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) _mm256_storeu_pd(out + i, log4(_mm256_loadu_pd(x + i)));
  if (nb < n) scalar::log_array(x + nb, n - nb, out + nb);
}

void exp_array(const double* x, std::size_t n, double* out) {
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) _mm256_storeu_pd(out + i, exp4(_mm256_loadu_pd(x + i)));
  if (nb < n) scalar::exp_array(x + nb, n - nb, out + nb);
}

void sq_dists(const double* colmaj, std::size_t m, std::size_t r, const double* q, double* out) {
  for (std::size_t j = 0; j < m; ++j) out[j] = 0.0;
  const std::size_t mb = m & ~std::size_t{3};
  for (std::size_t k = 0; k < r; ++k) {
    const double* col = colmaj + k * m;
    const __m256d qk = _mm256_set1_pd(q[k]);
    for (std::size_t j = 0; j < mb; j += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(col + j), qk);
      _mm256_storeu_pd(out + j, _mm256_fmadd_pd(d, d, _mm256_loadu_pd(out + j)));
    }
    for (std::size_t j = mb; j < m; ++j) {
      const double d = col[j] - q[k];
      out[j] = std::fma(d, d, out[j]);
    }
  }
}

void gk_transform(const double* z, std::size_t n, double A, double B, double g, double k,
                  double c, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vng = _mm256_set1_pd(-g);
  const __m256d vA = _mm256_set1_pd(A);
  const __m256d vB = _mm256_set1_pd(B);
  const __m256d vk = _mm256_set1_pd(k);
  const __m256d vc = _mm256_set1_pd(c);
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    const __m256d zi = _mm256_loadu_pd(z + i);
    const __m256d e = exp4(_mm256_mul_pd(vng, zi));
    const __m256d skew = _mm256_div_pd(_mm256_sub_pd(one, e), _mm256_add_pd(one, e));
    const __m256d s = _mm256_add_pd(one, _mm256_mul_pd(vc, skew));
    const __m256d kurt =
        exp4(_mm256_mul_pd(vk, log4(_mm256_add_pd(one, _mm256_mul_pd(zi, zi)))));
    __m256d t = _mm256_mul_pd(vB, s);
    t = _mm256_mul_pd(t, kurt);
    t = _mm256_mul_pd(t, zi);
    _mm256_storeu_pd(out + i, _mm256_add_pd(vA, t));
  }
  if (nb < n) scalar::gk_transform(z + nb, n - nb, A, B, g, k, c, out + nb);
}

}  // namespace elabc::kern::avx2

#else  // !(__AVX2__ && __FMA__)

#include <stdexcept>

namespace elabc::kern::avx2 {

namespace {
[[noreturn]] void unavailable() { throw std::runtime_error("AVX2 kernels not compiled in"); }
}  // namespace

bool compiled() { return false; }
void fill_u64(std::uint64_t, std::uint64_t, std::size_t, std::uint64_t*) { unavailable(); }
void fill_uniform(std::uint64_t, std::uint64_t, std::size_t, double*) { unavailable(); }
void fill_normal(std::uint64_t, std::uint64_t, std::size_t, double*) { unavailable(); }
void fill_bernoulli_words(std::uint64_t, std::uint64_t, std::uint64_t, std::size_t,
                          std::uint64_t*) {
  unavailable();
}
double sum(const double*, std::size_t) { unavailable(); }
double dot(const double*, const double*, std::size_t) { unavailable(); }
double sum_log(const double*, std::size_t) { unavailable(); }
void power_sums(const double*, std::size_t, double[4]) { unavailable(); }
void log_array(const double*, std::size_t, double*) { unavailable(); }
void exp_array(const double*, std::size_t, double*) { unavailable(); }
void sq_dists(const double*, std::size_t, std::size_t, const double*, double*) { unavailable(); }
void gk_transform(const double*, std::size_t, double, double, double, double, double, double*) {
  unavailable();
}

}  // namespace elabc::kern::avx2

#endif
