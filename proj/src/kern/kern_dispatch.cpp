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

#include "elabc/kern.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace elabc::kern {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve_initial() {
  if (const char* env = std::getenv("ELABC_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (avx2::compiled() && cpu_has_avx2()) return Backend::avx2;
      throw std::runtime_error("ELABC_KERNELS=avx2 requested but AVX2 is unavailable");
    }
    throw std::runtime_error("ELABC_KERNELS must be 'scalar' or 'avx2'");
  }
  return (avx2::compiled() && cpu_has_avx2()) ? Backend::avx2 : Backend::scalar;
}

Backend& backend_slot() {
  static Backend b = resolve_initial();
  return b;
}

}  // namespace

Backend active_backend() { return backend_slot(); }

bool avx2_supported() { return avx2::compiled() && cpu_has_avx2(); }

void force_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) {
    throw std::runtime_error("AVX2 backend unavailable on this CPU");
  }
  backend_slot() = b;
}

void fill_u64(std::uint64_t key, std::uint64_t ctr0, std::size_t n, std::uint64_t* out) {
  if (backend_slot() == Backend::avx2) return avx2::fill_u64(key, ctr0, n, out);
  return scalar::fill_u64(key, ctr0, n, out);
}

void fill_uniform(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out) {
  if (backend_slot() == Backend::avx2) return avx2::fill_uniform(key, ctr0, n, out);
  return scalar::fill_uniform(key, ctr0, n, out);
}

void fill_normal(std::uint64_t key, std::uint64_t ctr0, std::size_t n, double* out) {
  if (backend_slot() == Backend::avx2) return avx2::fill_normal(key, ctr0, n, out);
  return scalar::fill_normal(key, ctr0, n, out);
}

std::uint64_t bernoulli_threshold(double p) {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return 1ull << 53;
  return static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // p * 2^53
}

void fill_bernoulli_words(std::uint64_t key, std::uint64_t ctr0, std::uint64_t thresh53,
                          std::size_t nbits, std::uint64_t* words) {
  if (backend_slot() == Backend::avx2) {
    return avx2::fill_bernoulli_words(key, ctr0, thresh53, nbits, words);
  }
  return scalar::fill_bernoulli_words(key, ctr0, thresh53, nbits, words);
}

double sum(const double* x, std::size_t n) {
  return backend_slot() == Backend::avx2 ? avx2::sum(x, n) : scalar::sum(x, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  return backend_slot() == Backend::avx2 ? avx2::dot(x, y, n) : scalar::dot(x, y, n);
}

double sum_log(const double* x, std::size_t n) {
  return backend_slot() == Backend::avx2 ? avx2::sum_log(x, n) : scalar::sum_log(x, n);
}

void power_sums(const double* x, std::size_t n, double out[4]) {
  if (backend_slot() == Backend::avx2) return avx2::power_sums(x, n, out);
  return scalar::power_sums(x, n, out);
}

void log_array(const double* x, std::size_t n, double* out) {
  if (backend_slot() == Backend::avx2) return avx2::log_array(x, n, out);
  return scalar::log_array(x, n, out);
}

void exp_array(const double* x, std::size_t n, double* out) {
  if (backend_slot() == Backend::avx2) return avx2::exp_array(x, n, out);
  return scalar::exp_array(x, n, out);
}

void sq_dists(const double* colmaj, std::size_t m, std::size_t r, const double* q, double* out) {
  if (backend_slot() == Backend::avx2) return avx2::sq_dists(colmaj, m, r, q, out);
  return scalar::sq_dists(colmaj, m, r, q, out);
}

void gk_transform(const double* z, std::size_t n, double A, double B, double g, double k,
                  double c, double* out) {
  if (backend_slot() == Backend::avx2) return avx2::gk_transform(z, n, A, B, g, k, c, out);
  return scalar::gk_transform(z, n, A, B, g, k, c, out);
}

}  // namespace elabc::kern
