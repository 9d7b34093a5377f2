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
#include "divkit/kernels.hpp"

#include <cmath>
#include <limits>

namespace divkit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_alpha(double alpha, double floor)
{
  if (!std::isfinite(alpha) || !(alpha > floor))
  {
    throw ParameterError("alpha must exceed " + std::to_string(floor) + ", got " +
                         std::to_string(alpha));
  }
}

// x^a with 0^a = 0 for a > 0.
double power(double x, double a)
{
  return x > 0.0 ? std::pow(x, a) : 0.0;
}

std::vector<double> powers(std::span<double const> v, double a)
{
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    out[i] = power(v[i], a);
  }
  return out;
}

struct PowerIntegrals
{
  double ff;  // int f^{1+a}
  double fg;  // int f^a g
  double gg;  // int g^{1+a}
};

PowerIntegrals power_integrals(GridDensity const &g, GridDensity const &f, double alpha)
{
  require_same_grid(f, g);
  auto const &k    = kernels::active();
  double const h   = f.grid().step();
  auto const   fa  = powers(f.values(), alpha);
  auto const   ga  = powers(g.values(), alpha);
  return {k.trapezoid_product(fa, f.values(), h), k.trapezoid_product(fa, g.values(), h),
          k.trapezoid_product(ga, g.values(), h)};
}

}  // namespace

IndexTriple::IndexTriple(double a0, double a1, double a2)
  : a0_(a0)
  , a1_(a1)
  , a2_(a2)
{
  for (double a : {a0, a1, a2})
  {
    if (!std::isfinite(a) || !(a > 0.0))
    {
      throw ParameterError("index triple entries must be positive and finite");
    }
  }
}

IndexTriple IndexTriple::ldpd(double alpha)
{
  require_alpha(alpha, 0.0);
  return IndexTriple(1.0, (1.0 + alpha) / alpha, 1.0 / alpha);
}

double IndexTriple::C() const
{
  return std::pow(a0_, a0_) * std::pow(a2_, a2_) / std::pow(a1_, a1_);
}

bool DivergenceValue::finite() const noexcept
{
  return std::isfinite(value);
}

DivergenceValue bregman(StandardizedGenerator const &b, GridDensity const &g, GridDensity const &f)
{
  require_same_grid(f, g);
  std::size_t const   n = f.size();
  std::vector<double> bg(n), bf(n), dbf(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    bg[i]  = b.eval(g[i]);
    bf[i]  = b.eval(f[i]);
    dbf[i] = b.deriv1(f[i]);
  }
  double const v =
      kernels::active().trapezoid_bregman(bg, bf, dbf, g.values(), f.values(), f.grid().step());
  return {v, {v}, {}};
}

DivergenceValue dpd(GridDensity const &g, GridDensity const &f, double alpha)
{
  require_alpha(alpha, kMinAlpha);
  require_same_grid(f, g);
  std::size_t const   n = f.size();
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    double const fi = f[i];
    double const gi = g[i];
    if (fi > 0.0 && gi > 0.0)
    {
      // f^a (f - g) + g (g^a - f^a) / a, with g^a - f^a = f^a expm1(a log(g/f))
      double const fa = std::pow(fi, alpha);
      double const dg = fa * std::expm1(alpha * (std::log(gi) - std::log(fi)));
      t[i]            = fa * (fi - gi) + gi * dg / alpha;
    }
    else if (fi > 0.0)
    {
      t[i] = std::pow(fi, 1.0 + alpha);
    }
    else
    {
      t[i] = power(gi, 1.0 + alpha) / alpha;
    }
  }
  double const v = integrate(f.grid(), t);
  return {v, {v}, {}};
}

DivergenceValue kl(GridDensity const &g, GridDensity const &f)
{
  require_same_grid(f, g);
  std::size_t const   n = f.size();
  std::vector<double> t(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
  {
    if (g[i] == 0.0)
    {
      continue;
    }
    if (f[i] == 0.0)
    {
      return {kInf, {kInf}, "g > 0 where f = 0"};
    }
    t[i] = g[i] * (std::log(g[i]) - std::log(f[i]));
  }
  double const v = integrate(f.grid(), t);
  return {v, {v}, {}};
}

DivergenceValue ldpd(GridDensity const &g, GridDensity const &f, double alpha)
{
  require_alpha(alpha, kMinAlpha);
  auto const I = power_integrals(g, f, alpha);
  DivergenceValue out{0.0, {I.ff, I.fg, I.gg}, {}};
  if (!(I.ff > 0.0) || !std::isfinite(I.ff))
  {
    throw DegenerateIntegral("int f^{1+a}", "degenerate integral: int f^{1+a} is not positive");
  }
  if (!(I.gg > 0.0) || !std::isfinite(I.gg))
  {
    throw DegenerateIntegral("int g^{1+a}", "degenerate integral: int g^{1+a} is not positive");
  }
  if (I.fg == 0.0)
  {
    out.value = kInf;
    out.note  = "supports disjoint";
    return out;
  }
  out.value = std::log(I.ff) - (1.0 + alpha) / alpha * std::log(I.fg) + std::log(I.gg) / alpha;
  return out;
}

double holder_gap(GridDensity const &g, GridDensity const &f, double alpha)
{
  require_alpha(alpha, 0.0);
  auto const I = power_integrals(g, f, alpha);
  return std::pow(I.ff, alpha / (1.0 + alpha)) * std::pow(I.gg, 1.0 / (1.0 + alpha)) - I.fg;
}

DivergenceValue log_bregman(StandardizedGenerator const &b, GridDensity const &g,
                            GridDensity const &f, IndexTriple const &idx)
{
  require_same_grid(f, g);
  std::size_t const   n = f.size();
  std::vector<double> bf(n), dbf(n), bg(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    bf[i]  = b.eval(f[i]);
    dbf[i] = b.deriv1(f[i]);
    bg[i]  = b.eval(g[i]);
  }
  auto const  &k  = kernels::active();
  double const h  = f.grid().step();
  double const I0 = k.trapezoid_product_minus(dbf, f.values(), bf, h);
  double const I1 = k.trapezoid_product(dbf, g.values(), h);
  double const I2 = k.trapezoid(bg, h);

  auto check = [](double v, char const *name, char const *formula) {
    if (!(v > 0.0) || !std::isfinite(v))
    {
      throw DegenerateIntegral(name, std::string("degenerate integral ") + name + " = " +
                                         formula + " is " + std::to_string(v));
    }
  };
  check(I0, "I0", "int B'(f) f - B(f)");
  check(I1, "I1", "int B'(f) g");
  check(I2, "I2", "int B(g)");

  double const v = idx.a0() * std::log(I0 / idx.a0()) + idx.a2() * std::log(I2 / idx.a2()) -
                   idx.a1() * std::log(I1 / idx.a1());
  return {v, {I0, I1, I2}, {}};
}

bool nodewise_identical(GridDensity const &f, GridDensity const &g)
{
  require_same_grid(f, g);
  return kernels::active().max_abs_diff(f.values(), g.values()) < 1e-12;
}

}  // namespace divkit
