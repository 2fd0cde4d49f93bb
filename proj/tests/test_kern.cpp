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
#include <cstring>
#include <vector>

#include "doctest.h"

using namespace elabc;

namespace {

std::vector<double> random_positive(std::uint64_t key, std::size_t n, double lo, double hi) {
  std::vector<double> u(n);
  kern::scalar::fill_uniform(key, 0, n, u.data());
  for (auto& v : u) v = lo + (hi - lo) * v;
  return u;
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("reference transcendentals match libm closely") {
  const auto xs = random_positive(11, 20000, 1e-12, 50.0);
  double max_rel_log = 0, max_rel_exp = 0, max_abs_sc = 0;
  for (double x : xs) {
    const double l = kern::scalar::log_ref(x);
    max_rel_log = std::max(max_rel_log, std::abs(l - std::log(x)) /
                                            std::max(1e-300, std::abs(std::log(x))));
    const double e = kern::scalar::exp_ref(std::log(x));  // args in [-27.6, 3.9]
    max_rel_exp = std::max(max_rel_exp, std::abs(e - x) / x);
    const double t = 6.283185307179586 * (x / 50.0);
    double s, c;
    kern::scalar::sincos_ref(t, &s, &c);
    max_abs_sc = std::max({max_abs_sc, std::abs(s - std::sin(t)), std::abs(c - std::cos(t))});
  }
  CHECK(max_rel_log < 1e-14);
  CHECK(max_rel_exp < 1e-14);
  CHECK(max_abs_sc < 1e-13);

  CHECK(kern::scalar::log_ref(1.0) == 0.0);
  CHECK(kern::scalar::exp_ref(0.0) == 1.0);
  CHECK(kern::scalar::exp_ref(700.0) == doctest::Approx(std::exp(700.0)).epsilon(1e-13));
  CHECK(kern::scalar::log_ref(2.5e-308) ==
        doctest::Approx(std::log(2.5e-308)).epsilon(1e-14));
}

TEST_CASE("counter rng basics") {
  // Random access: filling in one go equals filling in chunks.
  std::vector<std::uint64_t> a(137), b(137);
  kern::scalar::fill_u64(42, 5, 137, a.data());
  kern::scalar::fill_u64(42, 5, 60, b.data());
  kern::scalar::fill_u64(42, 65, 77, b.data() + 60);
  CHECK(std::memcmp(a.data(), b.data(), a.size() * 8) == 0);

  // Uniforms strictly inside (0,1), mean/var sane.
  std::vector<double> u(200000);
  kern::scalar::fill_uniform(7, 0, u.size(), u.data());
  double mn = 1, mx = 0, mean = 0;
  for (double v : u) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
    mean += v;
  }
  mean /= double(u.size());
  CHECK(mn > 0.0);
  CHECK(mx < 1.0);
  CHECK(mean == doctest::Approx(0.5).epsilon(0.01));

  // Normal draws: moments at Monte Carlo accuracy.
  std::vector<double> z(400000);
  kern::scalar::fill_normal(99, 0, z.size(), z.data());
  double m1 = 0, m2 = 0, m4 = 0;
  for (double v : z) {
    m1 += v;
    m2 += v * v;
    m4 += v * v * v * v;
  }
  m1 /= double(z.size());
  m2 /= double(z.size());
  m4 /= double(z.size());
  CHECK(std::abs(m1) < 0.01);
  CHECK(m2 == doctest::Approx(1.0).epsilon(0.01));
  CHECK(m4 == doctest::Approx(3.0).epsilon(0.03));

  // Distinct derived keys give uncorrelated streams.
  const std::uint64_t k1 = kern::derive_key(3, 1), k2 = kern::derive_key(3, 2);
  CHECK(k1 != k2);
  std::vector<double> x1(10000), x2(10000);
  kern::scalar::fill_uniform(k1, 0, x1.size(), x1.data());
  kern::scalar::fill_uniform(k2, 0, x2.size(), x2.data());
  double cov = 0;
  for (std::size_t i = 0; i < x1.size(); ++i) cov += (x1[i] - 0.5) * (x2[i] - 0.5);
  cov /= double(x1.size());
  CHECK(std::abs(cov) < 0.005);
}

TEST_CASE("bernoulli word fill matches requested frequency") {
  const double p = 0.37;
  const std::size_t nbits = 200000;
  std::vector<std::uint64_t> words((nbits + 63) / 64);
  kern::scalar::fill_bernoulli_words(5, 0, kern::bernoulli_threshold(p), nbits, words.data());
  std::size_t ones = 0;
  for (auto w : words) ones += std::size_t(__builtin_popcountll(w));
  CHECK(double(ones) / double(nbits) == doctest::Approx(p).epsilon(0.02));

  // Degenerate thresholds.
  kern::scalar::fill_bernoulli_words(5, 0, kern::bernoulli_threshold(1.0), 130, words.data());
  CHECK(words[0] == ~0ull);
  CHECK(words[2] == 0x3ull);  // trailing bits stay zero
  kern::scalar::fill_bernoulli_words(5, 0, kern::bernoulli_threshold(0.0), 130, words.data());
  CHECK(words[0] == 0);
  CHECK(words[1] == 0);
}

TEST_CASE("scalar reductions agree with naive math") {
  const auto x = random_positive(21, 1003, 0.1, 2.0);
  const auto y = random_positive(22, 1003, -1.0, 1.0);
  long double s = 0, d = 0, sl = 0, p2 = 0, p3 = 0, p4 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i];
    d += x[i] * y[i];
    sl += std::log(x[i]);
    p2 += x[i] * x[i];
    p3 += x[i] * x[i] * x[i];
    p4 += x[i] * x[i] * x[i] * x[i];
  }
  CHECK(kern::scalar::sum(x.data(), x.size()) == doctest::Approx(double(s)).epsilon(1e-13));
  CHECK(kern::scalar::dot(x.data(), y.data(), x.size()) ==
        doctest::Approx(double(d)).epsilon(1e-12));
  CHECK(kern::scalar::sum_log(x.data(), x.size()) ==
        doctest::Approx(double(sl)).epsilon(1e-13));
  double ps[4];
  kern::scalar::power_sums(x.data(), x.size(), ps);
  CHECK(ps[0] == doctest::Approx(double(s)).epsilon(1e-13));
  CHECK(ps[1] == doctest::Approx(double(p2)).epsilon(1e-13));
  CHECK(ps[2] == doctest::Approx(double(p3)).epsilon(1e-13));
  CHECK(ps[3] == doctest::Approx(double(p4)).epsilon(1e-13));
}

TEST_CASE("avx2 variants are bit-identical to the scalar reference") {
  if (!kern::avx2_supported()) {
    MESSAGE("AVX2 not available; equivalence checks skipped");
    return;
  }
  const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 63, 64, 65, 127, 128, 1001};
  for (std::uint64_t key : {0ull, 1234567ull, ~0ull}) {
    for (std::size_t n : sizes) {
      std::vector<std::uint64_t> wa(n + 1), wb(n + 1);
      kern::scalar::fill_u64(key, 3, n, wa.data());
      kern::avx2::fill_u64(key, 3, n, wb.data());
      CHECK(std::memcmp(wa.data(), wb.data(), n * 8) == 0);

      std::vector<double> ua(n), ub(n);
      kern::scalar::fill_uniform(key, 11, n, ua.data());
      kern::avx2::fill_uniform(key, 11, n, ub.data());
      CHECK(bits_equal(ua, ub));

      std::vector<double> za(n), zb(n);
      kern::scalar::fill_normal(key, 17, n, za.data());
      kern::avx2::fill_normal(key, 17, n, zb.data());
      CHECK(bits_equal(za, zb));

      std::vector<std::uint64_t> ba((n + 63) / 64 + 1), bb((n + 63) / 64 + 1);
      const auto thr = kern::bernoulli_threshold(0.42);
      kern::scalar::fill_bernoulli_words(key, 29, thr, n, ba.data());
      kern::avx2::fill_bernoulli_words(key, 29, thr, n, bb.data());
      CHECK(std::memcmp(ba.data(), bb.data(), ((n + 63) / 64) * 8) == 0);

      const auto x = random_positive(key ^ 0x55, n, 1e-6, 40.0);
      const auto y = random_positive(key ^ 0x66, n, -3.0, 3.0);
      CHECK(kern::scalar::sum(x.data(), n) == kern::avx2::sum(x.data(), n));
      CHECK(kern::scalar::dot(x.data(), y.data(), n) == kern::avx2::dot(x.data(), y.data(), n));
      CHECK(kern::scalar::sum_log(x.data(), n) == kern::avx2::sum_log(x.data(), n));

      double pa[4], pb[4];
      kern::scalar::power_sums(x.data(), n, pa);
      kern::avx2::power_sums(x.data(), n, pb);
      CHECK(std::memcmp(pa, pb, sizeof pa) == 0);

      std::vector<double> la(n), lb(n), ea(n), eb(n);
      kern::scalar::log_array(x.data(), n, la.data());
      kern::avx2::log_array(x.data(), n, lb.data());
      CHECK(bits_equal(la, lb));
      kern::scalar::exp_array(y.data(), n, ea.data());
      kern::avx2::exp_array(y.data(), n, eb.data());
      CHECK(bits_equal(ea, eb));

      std::vector<double> ga(n), gb(n);
      kern::scalar::gk_transform(y.data(), n, 3.0, 1.0, 2.0, 0.5, 0.8, ga.data());
      kern::avx2::gk_transform(y.data(), n, 3.0, 1.0, 2.0, 0.5, 0.8, gb.data());
      CHECK(bits_equal(ga, gb));
    }
  }

  // sq_dists over assorted shapes.
  for (std::size_t m : {1u, 2u, 5u, 33u, 200u}) {
    for (std::size_t r : {1u, 2u, 4u, 7u}) {
      const auto pts = random_positive(m * 131 + r, m * r, -5.0, 5.0);
      const auto q = random_positive(m * 7 + r, r, -5.0, 5.0);
      std::vector<double> da(m), db(m);
      kern::scalar::sq_dists(pts.data(), m, r, q.data(), da.data());
      kern::avx2::sq_dists(pts.data(), m, r, q.data(), db.data());
      CHECK(bits_equal(da, db));
    }
  }
}

TEST_CASE("backend forcing is honored") {
  const auto original = kern::active_backend();
  kern::force_backend(kern::Backend::scalar);
  CHECK(kern::active_backend() == kern::Backend::scalar);
  std::vector<double> z(8);
  kern::fill_normal(1, 0, z.size(), z.data());  // routes through the scalar path
  kern::force_backend(original);
}
