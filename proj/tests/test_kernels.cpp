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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace {

using namespace divkit;
using divkit::kernels::Isa;
using divkit::kernels::KernelTable;

std::vector<double> random_vec(std::mt19937_64 &rng, std::size_t n, double lo, double hi)
{
  std::vector<double> v(n);
  for (double &x : v)
  {
    x = fixtures::uniform(rng, lo, hi);
  }
  return v;
}

// Lengths straddle the vector width and the unroll factor.
std::vector<std::size_t> const kLengths{0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 101, 4001};

double abs_sum(std::vector<double> const &v)
{
  double s = 0.0;
  for (double x : v)
  {
    s += std::abs(x);
  }
  return s;
}

TEST(Kernels, ScalarTrapezoidExactForLinear)
{
  auto const &k = kernels::scalar::table();
  std::vector<double> ones(101, 1.0), line(101);
  for (std::size_t i = 0; i < line.size(); ++i)
  {
    line[i] = static_cast<double>(i) / 100.0;
  }
  EXPECT_NEAR(k.trapezoid(ones, 0.01), 1.0, 1e-15);
  EXPECT_NEAR(k.trapezoid(line, 0.01), 0.5, 1e-15);
  EXPECT_EQ(k.trapezoid(std::vector<double>{5.0}, 0.1), 0.0);
}

TEST(Kernels, ScalarFusedKernelsMatchTheirDefinitions)
{
  std::mt19937_64 rng(7);
  auto const &k = kernels::scalar::table();
  for (std::size_t n : kLengths)
  {
    if (n < 2)
    {
      continue;
    }
    auto a = random_vec(rng, n, -1, 1), b = random_vec(rng, n, -1, 1), c = random_vec(rng, n, -1, 1);
    auto d = random_vec(rng, n, 0, 2), e = random_vec(rng, n, 0, 2);
    std::vector<double> prod(n), pm(n), sq(n), br(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      prod[i] = a[i] * b[i];
      pm[i]   = a[i] * b[i] - c[i];
      sq[i]   = (a[i] - b[i]) * (a[i] - b[i]);
      br[i]   = a[i] - b[i] - c[i] * (d[i] - e[i]);
    }
    double const h = 0.01;
    EXPECT_NEAR(k.trapezoid_product(a, b, h), k.trapezoid(prod, h), 1e-13);
    EXPECT_NEAR(k.trapezoid_product_minus(a, b, c, h), k.trapezoid(pm, h), 1e-13);
    EXPECT_NEAR(k.trapezoid_sqdiff(a, b, h), k.trapezoid(sq, h), 1e-13);
    EXPECT_NEAR(k.trapezoid_bregman(a, b, c, d, e, h), k.trapezoid(br, h), 1e-13);
  }
}

TEST(Kernels, ActiveTableIsAvailable)
{
  EXPECT_TRUE(kernels::available(kernels::active().isa));
  EXPECT_TRUE(kernels::available(Isa::scalar));
}

class KernelEquivalence : public ::testing::Test
{
protected:
  void SetUp() override
  {
    if (!kernels::available(Isa::avx2))
    {
      GTEST_SKIP() << "AVX2 not available on this machine";
    }
  }

  KernelTable const &ref = kernels::table(Isa::scalar);
  KernelTable const &vec = kernels::table(Isa::avx2);
};

TEST_F(KernelEquivalence, AgreesWithScalarReference)
{
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 20; ++rep)
  {
    for (std::size_t n : kLengths)
    {
      auto a = random_vec(rng, n, -3, 3), b = random_vec(rng, n, -3, 3);
      auto c = random_vec(rng, n, -3, 3), d = random_vec(rng, n, 0, 5), e = random_vec(rng, n, 0, 5);
      double const h   = fixtures::uniform(rng, 1e-3, 1.0);
      double const tol = 1e-13 * h * (abs_sum(a) + abs_sum(b) + abs_sum(c) + 1.0) * 10.0;

      EXPECT_NEAR(vec.trapezoid(a, h), ref.trapezoid(a, h), tol) << n;
      EXPECT_NEAR(vec.trapezoid_product(a, b, h), ref.trapezoid_product(a, b, h), tol) << n;
      EXPECT_NEAR(vec.trapezoid_product_minus(a, b, c, h), ref.trapezoid_product_minus(a, b, c, h),
                  tol)
          << n;
      EXPECT_NEAR(vec.trapezoid_sqdiff(a, b, h), ref.trapezoid_sqdiff(a, b, h), tol) << n;
      EXPECT_NEAR(vec.trapezoid_bregman(a, b, c, d, e, h), ref.trapezoid_bregman(a, b, c, d, e, h),
                  tol)
          << n;
      EXPECT_EQ(vec.max_abs_diff(a, b), ref.max_abs_diff(a, b)) << n;
    }
  }
}

TEST_F(KernelEquivalence, IdenticalInputsGiveExactZero)
{
  std::mt19937_64 rng(3);
  auto a = random_vec(rng, 4001, 0, 2);
  EXPECT_EQ(vec.trapezoid_sqdiff(a, a, 0.01), 0.0);
  EXPECT_EQ(vec.max_abs_diff(a, a), 0.0);
  EXPECT_EQ(ref.trapezoid_sqdiff(a, a, 0.01), 0.0);
}

}  // namespace
