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

// Scalar reference kernels. These define the contract: the AVX2 variants in
// kern_avx2.cpp must reproduce every output bit. Reductions therefore use
// four interleaved accumulators (the natural lane structure of a 256-bit
// register) combined as (a0+a2) + (a1+a3), followed by a sequential tail.
// Fused operations are written as std::fma exactly where the vector code
// uses a fused instruction.

#include "elabc/kern.hpp"

#include <bit>
#include <cmath>

#include "kern_coeffs.hpp"

namespace elabc::kern::scalar {

namespace {

using std::uint64_t;
namespace cf = elabc::kern::coeffs;

inline double to_unit(uint64_t w) {
  // 52-bit mantissa via the exponent-bias trick; exact and branch-free.
  const double d = std::bit_cast<double>((w >> 12) | 0x4330000000000000ull) - 4503599627370496.0;
  return (d + 0.5) * 0x1p-52;
}

}  // namespace

// fdlibm-style natural log; x must be a positive normal double.
double log_ref(double x) {
  uint64_t ix = std::bit_cast<uint64_t>(x);
  // Scale the mantissa into [sqrt(2)/2, sqrt(2)) and pull out the exponent.
  uint64_t hx = ix >> 32;
  hx += 0x3ff00000u - 0x3fe6a09eu;
  const std::int64_t k = static_cast<std::int64_t>(hx >> 20) - 0x3ff;
  hx = (hx & 0x000fffffu) + 0x3fe6a09eu;
  const double xs = std::bit_cast<double>((hx << 32) | (ix & 0xffffffffull));

  const double f = xs - 1.0;
  const double hfsq = 0.5 * f * f;
  const double s = f / (2.0 + f);
  const double z = s * s;
  const double w = z * z;
  const double t1 = w * (cf::kLg2 + w * (cf::kLg4 + w * cf::kLg6));
  const double t2 = z * (cf::kLg1 + w * (cf::kLg3 + w * (cf::kLg5 + w * cf::kLg7)));
  const double R = t2 + t1;
  const double dk = static_cast<double>(k);
  return dk * cf::kLn2Hi - ((hfsq - (s * (hfsq + R) + dk * cf::kLn2Lo)) - f);
}

// fdlibm-style exp; |x| must stay clear of the overflow/underflow range
// (all elabc call sites satisfy |x| < 700).
double exp_ref(double x) {
  const double kd = std::nearbyint(x * cf::kInvLn2);
  const double hi = x - kd * cf::kLn2Hi;
  const double lo = kd * cf::kLn2Lo;
  const double r = hi - lo;
  const double t = r * r;
  const double c =
      r - t * (cf::kExpP1 +
               t * (cf::kExpP2 + t * (cf::kExpP3 + t * (cf::kExpP4 + t * cf::kExpP5))));
  const double y = 1.0 - ((lo - (r * c) / (2.0 - c)) - hi);
  const auto k = static_cast<std::int64_t>(kd);
  const double scale = std::bit_cast<double>(static_cast<uint64_t>(1023 + k) << 52);
  return y * scale;
}

// Simultaneous sin/cos for t in [0, 2*pi); quadrant reduction plus the
// fdlibm kernels on |r| <= pi/4.
void sincos_ref(double t, double* sout, double* cout) {
  const double qd = std::nearbyint(t * cf::kTwoOverPi);
  const double r = (t - qd * cf::kPiO2Hi) - qd * cf::kPiO2Lo;
  const int q = static_cast<int>(qd) & 3;

  const double z = r * r;
  const double ps =
      cf::kS2 + z * (cf::kS3 + z * (cf::kS4 + z * (cf::kS5 + z * cf::kS6)));
  const double sk = r + r * z * (cf::kS1 + z * ps);
  const double pc =
      cf::kC2 + z * (cf::kC3 + z * (cf::kC4 + z * (cf::kC5 + z * cf::kC6)));
  const double ck = 1.0 - 0.5 * z + z * z * (cf::kC1 + z * pc);

  switch (q) {
    case 0: *sout = sk;  *cout = ck;  break;
    case 1: *sout = ck;  *cout = -sk; break;
    case 2: *sout = -sk; *cout = -ck; break;
    default: *sout = -ck; *cout = sk; break;
  }
}

void fill_u64(uint64_t key, uint64_t ctr0, std::size_t n, uint64_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = mix64(key, ctr0 + i);
}

void fill_uniform(uint64_t key, uint64_t ctr0, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = to_unit(mix64(key, ctr0 + i));
}

void fill_normal(uint64_t key, uint64_t ctr0, std::size_t n, double* out) {
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const double u1 = to_unit(mix64(key, ctr0 + 2 * p));
    const double u2 = to_unit(mix64(key, ctr0 + 2 * p + 1));
    const double rad = std::sqrt(-2.0 * log_ref(u1));
    double s, c;
    sincos_ref(cf::kTwoPi * u2, &s, &c);
    out[2 * p] = rad * c;
    out[2 * p + 1] = rad * s;
  }
  if (n & 1) {
    const double u1 = to_unit(mix64(key, ctr0 + n - 1));
    const double u2 = to_unit(mix64(key, ctr0 + n));
    const double rad = std::sqrt(-2.0 * log_ref(u1));
    double s, c;
    sincos_ref(cf::kTwoPi * u2, &s, &c);
    out[n - 1] = rad * c;
  }
}

void fill_bernoulli_words(uint64_t key, uint64_t ctr0, uint64_t thresh53, std::size_t nbits,
                          uint64_t* words) {
  const std::size_t nwords = (nbits + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) words[w] = 0;
  for (std::size_t i = 0; i < nbits; ++i) {
    const uint64_t draw = mix64(key, ctr0 + i) >> 11;
    if (draw < thresh53) words[i >> 6] |= (1ull << (i & 63));
  }
}

double sum(const double* x, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    a0 += x[i];
    a1 += x[i + 1];
    a2 += x[i + 2];
    a3 += x[i + 3];
  }
  double s = (a0 + a2) + (a1 + a3);
  for (std::size_t i = nb; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    a0 = std::fma(x[i], y[i], a0);
    a1 = std::fma(x[i + 1], y[i + 1], a1);
    a2 = std::fma(x[i + 2], y[i + 2], a2);
    a3 = std::fma(x[i + 3], y[i + 3], a3);
  }
  double s = (a0 + a2) + (a1 + a3);
  for (std::size_t i = nb; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double sum_log(const double* x, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    a0 += log_ref(x[i]);
    a1 += log_ref(x[i + 1]);
    a2 += log_ref(x[i + 2]);
    a3 += log_ref(x[i + 3]);
  }
  double s = (a0 + a2) + (a1 + a3);
  for (std::size_t i = nb; i < n; ++i) s += log_ref(x[i]);
  return s;
}

void power_sums(const double* x, std::size_t n, double out[4]) {
  double s1[4] = {0, 0, 0, 0}, s2[4] = {0, 0, 0, 0}, s3[4] = {0, 0, 0, 0}, s4[4] = {0, 0, 0, 0};
  const std::size_t nb = n & ~std::size_t{3};
  for (std::size_t i = 0; i < nb; i += 4) {
    for (int j = 0; j < 4; ++j) {
      const double v = x[i + j];
      const double v2 = v * v;
      const double v3 = v2 * v;
      const double v4 = v2 * v2;
      s1[j] += v;
      s2[j] += v2;
      s3[j] += v3;
      s4[j] += v4;
    }
  }
  double t1 = (s1[0] + s1[2]) + (s1[1] + s1[3]);
  double t2 = (s2[0] + s2[2]) + (s2[1] + s2[3]);
  double t3 = (s3[0] + s3[2]) + (s3[1] + s3[3]);
  double t4 = (s4[0] + s4[2]) + (s4[1] + s4[3]);
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
  for (std::size_t i = 0; i < n; ++i) out[i] = log_ref(x[i]);
}

void exp_array(const double* x, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = exp_ref(x[i]);
}

void sq_dists(const double* colmaj, std::size_t m, std::size_t r, const double* q, double* out) {
  for (std::size_t j = 0; j < m; ++j) out[j] = 0.0;
  for (std::size_t k = 0; k < r; ++k) {
    const double* col = colmaj + k * m;
    const double qk = q[k];
    for (std::size_t j = 0; j < m; ++j) {
      const double d = col[j] - qk;
      out[j] = std::fma(d, d, out[j]);
    }
  }
}

void gk_transform(const double* z, std::size_t n, double A, double B, double g, double k,
                  double c, double* out) {
  const double ng = -g;
  for (std::size_t i = 0; i < n; ++i) {
    const double zi = z[i];
    const double e = exp_ref(ng * zi);
    const double skew = (1.0 - e) / (1.0 + e);
    const double s = 1.0 + c * skew;
    const double kurt = exp_ref(k * log_ref(1.0 + zi * zi));
    double t = B * s;
    t = t * kurt;
    t = t * zi;
    out[i] = A + t;
  }
}

}  // namespace elabc::kern::scalar
