//------------------------------------------------------------------------------
//
//   Copyright 2026 The divkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include "divkit/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace divkit::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 4;

double hsum(__m256d v)
{
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo         = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double ends(double first, double last)
{
  return 0.5 * (first + last);
}

double trapezoid(std::span<double const> v, double step)
{
  std::size_t const n = v.size();
  if (n < 2)
  {
    return 0.0;
  }
  double const *p = v.data();
  __m256d acc0    = _mm256_setzero_pd();
  __m256d acc1    = _mm256_setzero_pd();
  std::size_t i   = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes)
  {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(p + i + kLanes));
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i)
  {
    sum += p[i];
  }
  return step * (sum - ends(v.front(), v.back()));
}

double trapezoid_product(std::span<double const> a, std::span<double const> b, double step)
{
  std::size_t const n = a.size();
  if (n < 2)
  {
    return 0.0;
  }
  __m256d acc0  = _mm256_setzero_pd();
  __m256d acc1  = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes)
  {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(&a[i + kLanes]), _mm256_loadu_pd(&b[i + kLanes]), acc1);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i)
  {
    sum += a[i] * b[i];
  }
  return step * (sum - ends(a[0] * b[0], a[n - 1] * b[n - 1]));
}

double trapezoid_product_minus(std::span<double const> a, std::span<double const> b,
                               std::span<double const> c, double step)
{
  std::size_t const n = a.size();
  if (n < 2)
  {
    return 0.0;
  }
  __m256d acc   = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
  {
    __m256d const t = _mm256_fmsub_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]),
                                      _mm256_loadu_pd(&c[i]));
    acc = _mm256_add_pd(acc, t);
  }
  double sum = hsum(acc);
  for (; i < n; ++i)
  {
    sum += a[i] * b[i] - c[i];
  }
  return step * (sum - ends(a[0] * b[0] - c[0], a[n - 1] * b[n - 1] - c[n - 1]));
}

double trapezoid_sqdiff(std::span<double const> a, std::span<double const> b, double step)
{
  std::size_t const n = a.size();
  if (n < 2)
  {
    return 0.0;
  }
  __m256d acc   = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
  {
    __m256d const d = _mm256_sub_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
    acc             = _mm256_fmadd_pd(d, d, acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i)
  {
    double const d = a[i] - b[i];
    sum += d * d;
  }
  double const d0 = a[0] - b[0];
  double const d1 = a[n - 1] - b[n - 1];
  return step * (sum - ends(d0 * d0, d1 * d1));
}

double bregman_term(double bg, double bf, double dbf, double g, double f)
{
  return bg - bf - dbf * (g - f);
}

double trapezoid_bregman(std::span<double const> bg, std::span<double const> bf,
                         std::span<double const> dbf, std::span<double const> g,
                         std::span<double const> f, double step)
{
  std::size_t const n = bg.size();
  if (n < 2)
  {
    return 0.0;
  }
  __m256d acc   = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
  {
    __m256d const diff = _mm256_sub_pd(_mm256_loadu_pd(&g[i]), _mm256_loadu_pd(&f[i]));
    __m256d const gap  = _mm256_sub_pd(_mm256_loadu_pd(&bg[i]), _mm256_loadu_pd(&bf[i]));
    // gap - dbf * diff
    acc = _mm256_add_pd(acc, _mm256_fnmadd_pd(_mm256_loadu_pd(&dbf[i]), diff, gap));
  }
  double sum = hsum(acc);
  for (; i < n; ++i)
  {
    sum += bregman_term(bg[i], bf[i], dbf[i], g[i], f[i]);
  }
  std::size_t const k = n - 1;
  return step * (sum - ends(bregman_term(bg[0], bf[0], dbf[0], g[0], f[0]),
                            bregman_term(bg[k], bf[k], dbf[k], g[k], f[k])));
}

double max_abs_diff(std::span<double const> a, std::span<double const> b)
{
  std::size_t const n  = a.size();
  __m256d const signbit = _mm256_set1_pd(-0.0);
  __m256d m             = _mm256_setzero_pd();
  std::size_t i         = 0;
  for (; i + kLanes <= n; i += kLanes)
  {
    __m256d const d = _mm256_sub_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
    m               = _mm256_max_pd(m, _mm256_andnot_pd(signbit, d));
  }
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, m);
  double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i)
  {
    out = std::max(out, std::abs(a[i] - b[i]));
  }
  return out;
}

constexpr KernelTable kTable{Isa::avx2,       &trapezoid,        &trapezoid_product,
                             &trapezoid_product_minus, &trapezoid_sqdiff, &trapezoid_bregman,
                             &max_abs_diff};

}  // namespace

KernelTable const &table() noexcept
{
  return kTable;
}

}  // namespace divkit::kernels::avx2
