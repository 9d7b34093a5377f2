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

#include "divkit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace divkit::kernels::scalar {
namespace {

double ends(double first, double last)
{
  return 0.5 * (first + last);
}

double trapezoid(std::span<double const> v, double step)
{
  if (v.size() < 2)
  {
    return 0.0;
  }
  double sum = 0.0;
  for (double x : v)
  {
    sum += x;
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
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
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
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
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
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
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
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    sum += bregman_term(bg[i], bf[i], dbf[i], g[i], f[i]);
  }
  std::size_t const k = n - 1;
  return step * (sum - ends(bregman_term(bg[0], bf[0], dbf[0], g[0], f[0]),
                            bregman_term(bg[k], bf[k], dbf[k], g[k], f[k])));
}

double max_abs_diff(std::span<double const> a, std::span<double const> b)
{
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

constexpr KernelTable kTable{Isa::scalar,      &trapezoid,        &trapezoid_product,
                             &trapezoid_product_minus, &trapezoid_sqdiff, &trapezoid_bregman,
                             &max_abs_diff};

}  // namespace

KernelTable const &table() noexcept
{
  return kTable;
}

}  // namespace divkit::kernels::scalar
