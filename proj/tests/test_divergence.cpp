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

#include "divkit/divergence.hpp"
#include "divkit/error.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using namespace divkit;

// Plain trapezoid loop, independent of the kernel tables.
double trapezoid_oracle(Grid const &g, std::vector<double> const &h)
{
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
  {
    double const w = (i == 0 || i + 1 == h.size()) ? 0.5 : 1.0;
    s += w * h[i];
  }
  return s * g.step();
}

double sqdiff_oracle(GridDensity const &g, GridDensity const &f)
{
  std::vector<double> h(g.size());
  for (std::size_t i = 0; i < h.size(); ++i)
  {
    h[i] = (g[i] - f[i]) * (g[i] - f[i]);
  }
  return trapezoid_oracle(g.grid(), h);
}

struct UniformPair
{
  GridDensity f;  // U(0, 1)
  GridDensity g;  // U(0, 1/2)
};

UniformPair uniform_pair(Grid const &grid)
{
  return {uniform_density(1.0, grid), uniform_density(2.0, grid)};
}

Grid const kCoarse = Grid::make(0.0, 2.0, 2001);
Grid const kFine   = Grid::make(0.0, 2.0, 20001);

auto const &pairs()
{
  static auto const p = fixtures::random_pairs(100, 20260101);
  return p;
}

TEST(Bregman, IdenticalDensitiesGiveZero)
{
  auto const &[g, f] = pairs().front();
  for (auto const &[name, gen] : fixtures::builtin_generators())
  {
    EXPECT_EQ(bregman(standardize(gen), f, f).value, 0.0) << name;
  }
}

TEST(Bregman, SquareGeneratorIsSquaredL2)
{
  auto const b = standardize(dpd_generator(1.0));  // y^2
  for (std::size_t i = 0; i < 20; ++i)
  {
    auto const &[g, f] = pairs()[i];
    EXPECT_NEAR(bregman(b, g, f).value, sqdiff_oracle(g, f), 1e-12);
  }
}

TEST(Bregman, DpdUniformPairHandOracle)
{
  auto const [f, g] = uniform_pair(kCoarse);
  double const v    = bregman(standardize(dpd_generator(1.0)), g, f).value;
  EXPECT_NEAR(v, sqdiff_oracle(g, f), 1e-12);
  EXPECT_NEAR(v, 1.0, 2e-3);  // continuous value (2-1)^2 * 0.5 + 1 * 0.5
  auto const [ff, gf] = uniform_pair(kFine);
  EXPECT_NEAR(bregman(standardize(dpd_generator(1.0)), gf, ff).value, 1.0, 2e-4);
}

TEST(Bregman, NonNegativeAndZeroOnlyForEqualPairs)
{
  for (auto const &[name, gen] : fixtures::builtin_generators())
  {
    auto const b = standardize(gen);
    for (auto const &[g, f] : pairs())
    {
      double const v = bregman(b, g, f).value;
      EXPECT_GE(v, -kQuadratureTolerance) << name;
      EXPECT_GT(v, kQuadratureTolerance) << name;  // no random pair is nodewise identical
      ASSERT_FALSE(nodewise_identical(f, g));
    }
  }
}

TEST(Bregman, GridMismatch)
{
  auto const f = uniform_density(1.0, kCoarse);
  auto const g = uniform_density(1.0, Grid::make(0.0, 2.0, 2002));
  EXPECT_THROW(bregman(standardize(exp_generator()), g, f), GridMismatch);
  EXPECT_THROW(dpd(g, f, 1.0), GridMismatch);
  EXPECT_THROW(kl(g, f), GridMismatch);
  EXPECT_THROW(ldpd(g, f, 1.0), GridMismatch);
  EXPECT_THROW(holder_gap(g, f, 1.0), GridMismatch);
}

TEST(Dpd, AlphaOneIsSquaredL2)
{
  for (std::size_t i = 0; i < 20; ++i)
  {
    auto const &[g, f] = pairs()[i];
    EXPECT_NEAR(dpd(g, f, 1.0).value, sqdiff_oracle(g, f), 1e-12);
  }
}

TEST(Dpd, MatchesBregmanWithDpdGenerator)
{
  for (double alpha : {0.1, 0.25, 0.5, 1.0, 2.0})
  {
    auto const b = standardize(dpd_generator(alpha));
    for (auto const &[g, f] : pairs())
    {
      EXPECT_LT(std::abs(dpd(g, f, alpha).value - bregman(b, g, f).value), 1e-9) << alpha;
    }
  }
}

TEST(Dpd, ZeroForEqualAndRejectsTinyAlpha)
{
  auto const &[g, f] = pairs()[3];
  EXPECT_EQ(dpd(f, f, 0.5).value, 0.0);
  EXPECT_THROW(dpd(g, f, 1e-6), ParameterError);
  EXPECT_THROW(dpd(g, f, 0.0), ParameterError);
  EXPECT_THROW(ldpd(g, f, 1e-7), ParameterError);
}

TEST(Kl, UniformPairIsLogTwo)
{
  auto const [f, g] = uniform_pair(kCoarse);
  EXPECT_NEAR(kl(g, f).value, std::numbers::ln2, 1e-3);
  auto const [ff, gf] = uniform_pair(kFine);
  EXPECT_NEAR(kl(gf, ff).value, std::numbers::ln2, 1e-4);
  EXPECT_EQ(kl(f, f).value, 0.0);
}

TEST(Kl, InfiniteWhereReferenceVanishes)
{
  auto const [f, g] = uniform_pair(kCoarse);
  auto const v      = kl(f, g);  // f > 0 on (1/2, 1] where g = 0
  EXPECT_TRUE(std::isinf(v.value));
  EXPECT_GT(v.value, 0.0);
  EXPECT_FALSE(v.note.empty());
}

TEST(Ldpd, UniformPairMatchesThreeIntegralOracle)
{
  // int f^2 = p, int f g = p, int g^2 = q with p, q the rescaled plateaus
  auto const [f, g] = uniform_pair(kFine);
  auto const v      = ldpd(g, f, 1.0);
  double const p = f[0], q = g[0];
  EXPECT_NEAR(v.terms[0], p, 1e-12);
  EXPECT_NEAR(v.terms[1], p, 1e-12);
  EXPECT_NEAR(v.terms[2], q, 1e-12);
  EXPECT_NEAR(v.value, std::log(q / p), 1e-12);
  EXPECT_NEAR(v.value, std::numbers::ln2, 1e-4);
}

TEST(Ldpd, DisjointSupportsAreInfinite)
{
  Grid const   grid = Grid::make(0.0, 2.0, 2001);
  auto const   f    = uniform_density(2.0, grid);  // [0, 0.5]
  std::vector<double> raw(grid.n, 0.0);
  for (std::size_t i = 1200; i <= 1800; ++i)
  {
    raw[i] = 1.0;
  }
  auto const g = GridDensity::normalize(grid, raw);
  auto const v = ldpd(g, f, 0.5);
  EXPECT_TRUE(std::isinf(v.value));
  EXPECT_EQ(v.note, "supports disjoint");
}

TEST(Ldpd, NonNegativeOverRandomPairs)
{
  for (double alpha : {0.25, 0.5, 1.0, 2.0})
  {
    for (auto const &[g, f] : pairs())
    {
      double const v = ldpd(g, f, alpha).value;
      EXPECT_GE(v, -kQuadratureTolerance);
      EXPECT_GT(v, kQuadratureTolerance);
      EXPECT_NEAR(ldpd(f, f, alpha).value, 0.0, kQuadratureTolerance);
    }
  }
}

TEST(HolderGap, UniformPairAndSign)
{
  auto const [f, g] = uniform_pair(kFine);
  EXPECT_NEAR(holder_gap(g, f, 1.0), std::sqrt(2.0) - 1.0, 1e-3);
  double const p = f[0], q = g[0];
  EXPECT_NEAR(holder_gap(g, f, 1.0), std::sqrt(p * q) - p, 1e-12);
  EXPECT_NEAR(holder_gap(f, f, 1.0), 0.0, 1e-15);
  for (double alpha : {0.25, 1.0, 2.0})
  {
    for (auto const &[gg, ff] : pairs())
    {
      double const gap = holder_gap(gg, ff, alpha);
      EXPECT_GE(gap, -kQuadratureTolerance);
      EXPECT_GT(gap, kQuadratureTolerance);
    }
  }
}

TEST(LogBregman, StandardizedDpdWithLdpdTripleIsLdpd)
{
  for (double alpha : {0.25, 0.5, 1.0, 2.0})
  {
    auto const b   = standardize(power_generator(1.0 / alpha, alpha));
    auto const idx = IndexTriple::ldpd(alpha);
    for (auto const &[g, f] : pairs())
    {
      EXPECT_LT(std::abs(log_bregman(b, g, f, idx).value - ldpd(g, f, alpha).value), 1e-9);
    }
    auto const via_dpd = standardize(dpd_generator(alpha));
    auto const &[g, f] = pairs()[5];
    EXPECT_LT(std::abs(log_bregman(via_dpd, g, f, idx).value - ldpd(g, f, alpha).value), 1e-9);
  }
}

TEST(LogBregman, EqualDensitiesGiveZeroForPowerFamily)
{
  for (double K : {0.1, 1.0, 7.0})
  {
    for (double alpha : {0.5, 1.0, 3.0})
    {
      auto const b = standardize(power_generator(K, alpha));
      for (std::size_t i = 0; i < 10; ++i)
      {
        auto const &f = pairs()[i].second;
        EXPECT_NEAR(log_bregman(b, f, f, IndexTriple::ldpd(alpha)).value, 0.0, 1e-12);
      }
    }
  }
}

TEST(LogBregman, ScaleInvarianceWhenBetaIsZero)
{
  IndexTriple const idx(0.7, 2.2, 1.5);
  ASSERT_NEAR(idx.beta(), 0.0, 1e-15);
  for (auto const &[name, gen] : fixtures::builtin_generators())
  {
    auto const b = standardize(gen);
    for (std::size_t i = 0; i < 10; ++i)
    {
      auto const &[g, f] = pairs()[i];
      double const base  = log_bregman(b, g, f, idx).value;
      for (double K : {0.1, 3.0, 100.0})
      {
        EXPECT_LT(std::abs(log_bregman(b.scaled(K), g, f, idx).value - base), 1e-9) << name;
      }
    }
  }
}

TEST(LogBregman, ExpUniformPairFixture)
{
  // mpmath oracle (tests/oracles/fixtures.py) on [0, 2] with 2001 nodes
  auto const [f, g] = uniform_pair(kCoarse);
  auto const v      = log_bregman(standardize(exp_generator()), g, f, IndexTriple(1, 2, 1));
  EXPECT_NEAR(v.value, 1.0884244304689880163, 1e-12);
  EXPECT_NEAR(v.terms[0], 0.99914153814691759177, 1e-12);
  EXPECT_NEAR(v.terms[1], 1.7169237061648164586, 1e-12);
  EXPECT_NEAR(v.terms[2], 2.1903408981765388752, 1e-12);
}

TEST(LogBregman, DegenerateIntegralsNameTheTerm)
{
  Grid const grid = padded_grid(0.0, 1e-3, 401);
  auto const f    = uniform_density(1000.0, grid);
  try
  {
    log_bregman(standardize(exp_generator()), f, f, IndexTriple(1, 2, 1));  // e^1000 overflows
    FAIL() << "expected DegenerateIntegral";
  }
  catch (DegenerateIntegral const &e)
  {
    EXPECT_EQ(e.term(), "I0");
  }

  auto const concave = ConvexGenerator::from_functions(
      "-y^2", [](double y) { return -y * y; }, [](double y) { return -2.0 * y; });
  auto const &[g, h] = pairs()[0];
  try
  {
    log_bregman(standardize(concave), g, h, IndexTriple(1, 2, 1));
    FAIL() << "expected DegenerateIntegral";
  }
  catch (DegenerateIntegral const &e)
  {
    EXPECT_EQ(e.term(), "I0");
  }
}

TEST(IndexTriple, DerivedQuantities)
{
  IndexTriple const t(1, 2, 1);
  EXPECT_EQ(t.beta(), 0.0);
  EXPECT_DOUBLE_EQ(t.C(), 0.25);
  IndexTriple const u(2, 1, 3);
  EXPECT_EQ(u.beta(), 4.0);
  EXPECT_DOUBLE_EQ(u.C(), 4.0 * 27.0);
  EXPECT_THROW(IndexTriple(0, 1, 1), ParameterError);
  EXPECT_THROW(IndexTriple(1, -1, 1), ParameterError);
}

TEST(KlLimit, GapsShrinkMonotonically)
{
  Grid const grid  = Grid::make(-10.0, 10.0, 4001);
  Bump const fb[]  = {{1.0, 0.0, 1.0}};
  Bump const gb[]  = {{1.0, 0.5, 1.2}};
  auto const f     = mixture_density(grid, fb);
  auto const g     = mixture_density(grid, gb);
  double const ref = kl(g, f).value;
  double prev_d = INFINITY, prev_l = INFINITY;
  for (double alpha : {1e-1, 1e-2, 1e-3, 1e-4})
  {
    double const gd = std::abs(dpd(g, f, alpha).value - ref);
    double const gl = std::abs(ldpd(g, f, alpha).value - ref);
    EXPECT_LT(gd, prev_d);
    EXPECT_LT(gl, prev_l);
    prev_d = gd;
    prev_l = gl;
  }
  EXPECT_LT(prev_d, 1e-3);
  EXPECT_LT(prev_l, 1e-3);
}

}  // namespace
