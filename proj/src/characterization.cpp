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

#include "divkit/characterization.hpp"

#include "divkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace divkit {
namespace {

constexpr double kBetaZero = 1e-12;

std::string num(double x)
{
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Uniform on [0, 1) from the top 53 bits; mt19937_64 output is specified by
// the standard, so this is reproducible across standard libraries.
double unit_uniform(std::mt19937_64 &rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64 &rng, double lo, double hi)
{
  return lo + (hi - lo) * unit_uniform(rng);
}

DensitySpec uniform_spec(double theta, Grid const &grid)
{
  DensitySpec s;
  s.family = DensitySpec::Family::uniform;
  s.grid   = grid;
  s.theta  = theta;
  return s;
}

DensitySpec random_mixture(std::mt19937_64 &rng, Grid const &grid)
{
  DensitySpec s;
  s.family     = DensitySpec::Family::bump_mixture;
  s.grid       = grid;
  double const w = uniform_in(rng, 0.2, 0.8);
  for (double weight : {w, 1.0 - w})
  {
    double const mean = uniform_in(rng, -2.0, 2.0);
    double const sd   = uniform_in(rng, 0.3, 1.5);
    s.bumps.push_back({weight, mean, sd});
  }
  return s;
}

// Larger |defect| is worse; ties go to the smaller theta.
bool worse(double d, double theta, double best_d, double best_theta)
{
  double const a = std::abs(d), b = std::abs(best_d);
  return a > b || (a == b && theta < best_theta);
}

}  // namespace

UFunctionParams::UFunctionParams(double a0, double a2)
  : a0_(a0)
  , a2_(a2)
{
  if (!(a0 > 0.0) || !(a2 > 0.0) || !std::isfinite(a0) || !std::isfinite(a2))
  {
    throw ParameterError("u-function exponents must be positive");
  }
}

double UFunctionParams::C0() const
{
  // extended precision keeps u(gamma) and C0 within a couple of ulps
  long double const a0 = a0_;
  long double const a2 = a2_;
  long double const s  = a0 + a2;
  return static_cast<double>(std::exp(a0 * std::log(a0 / s) + a2 * std::log(a2 / s)));
}

double u(double x, UFunctionParams const &p)
{
  if (!(x >= 0.0 && x <= 1.0))
  {
    throw ParameterError("u(x) needs 0 <= x <= 1, got " + num(x));
  }
  long double const lx = x;
  return static_cast<double>(std::pow(1.0L - lx, static_cast<long double>(p.a0())) *
                             std::pow(lx, static_cast<long double>(p.a2())));
}

double uniform_identity_defect(StandardizedGenerator const &b, double theta, IndexTriple const &idx)
{
  if (!(theta > 0.0) || !std::isfinite(theta))
  {
    throw ParameterError("theta must be positive");
  }
  double const bt  = b.eval(theta);
  double const bpt = b.deriv1(theta);
  if (!(bpt > 0.0))
  {
    throw PreconditionViolation("B'(theta) must be positive at theta = " + num(theta));
  }
  // max(., 0): B(t) = t B'(t) up to rounding gives 0^a0 = 0
  double const first = std::max(bpt - bt / theta, 0.0);
  return std::pow(first, idx.a0()) * std::pow(bt / theta, idx.a2()) -
         idx.C() * std::pow(bpt, idx.a1());
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
  {
    throw ParameterError("log grid needs 0 < lo < hi and n >= 2");
  }
  std::vector<double> out(n);
  double const       a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
  {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back()  = hi;
  return out;
}

char const *to_string(Verdict v) noexcept
{
  return v == Verdict::consistent ? "consistent-with-LBF" : "refuted";
}

char const *to_string(WitnessKind k) noexcept
{
  switch (k)
  {
  case WitnessKind::theta_defect:
    return "theta-defect";
  case WitnessKind::negativity:
    return "negativity";
  case WitnessKind::zero_without_equality:
    return "zero-without-equality";
  }
  return "unknown";
}

DiagnosticReport theta_scan(StandardizedGenerator const &b, IndexTriple const &idx,
                            std::span<double const> thetas, double tolerance)
{
  DiagnosticReport r;
  r.generator = b.label();
  r.a0        = idx.a0();
  r.a1        = idx.a1();
  r.a2        = idx.a2();
  r.beta      = idx.beta();
  r.beta_zero = std::abs(r.beta) <= kBetaZero;
  r.tolerance = tolerance;

  UFunctionParams const p(idx);
  double const          c0 = p.C0();
  double const          c  = idx.C();

  std::size_t dropped = 0;
  for (double theta : thetas)
  {
    double const bt  = b.eval(theta);
    double const bpt = b.deriv1(theta);
    if (!std::isfinite(bt) || !std::isfinite(bpt) || !(bpt > 0.0))
    {
      ++dropped;
      continue;
    }
    double ratio = bt / (theta * bpt);
    if (ratio < 0.0 || ratio > 1.0)
    {
      if (ratio < -1e-12 || ratio > 1.0 + 1e-12)
      {
        r.warnings.push_back("ratio " + num(ratio) + " outside [0,1] at theta " + num(theta) +
                             "; generator may not be convex");
      }
      ratio = std::clamp(ratio, 0.0, 1.0);
    }
    double const ux     = u(ratio, p);
    double const defect = r.beta_zero ? ux - c0 : c * std::pow(bpt, -r.beta) - ux;

    r.thetas.push_back(theta);
    r.ratios.push_back(ratio);
    r.defects.push_back(defect);
    r.identity_defects.push_back(uniform_identity_defect(b, theta, idx));

    if (r.thetas.size() == 1 || worse(defect, theta, r.worst_defect, r.worst_theta))
    {
      r.worst_defect = defect;
      r.worst_theta  = theta;
    }
  }
  if (dropped > 0)
  {
    r.warnings.push_back("dropped " + std::to_string(dropped) +
                         " probe(s) where B or B' is not finite; probe range shrunk");
  }
  if (r.thetas.empty())
  {
    throw PreconditionViolation("theta scan: no probe with finite B and B'");
  }
  r.verdict = std::abs(r.worst_defect) > tolerance ? Verdict::refuted : Verdict::consistent;
  return r;
}

DiagnosticReport theta_scan(StandardizedGenerator const &b, IndexTriple const &idx)
{
  auto const thetas = log_grid(1e-3, 1e3, 200);
  return theta_scan(b, idx, thetas);
}

GridDensity DensitySpec::materialize() const
{
  if (family == Family::uniform)
  {
    return uniform_density(theta, grid);
  }
  return mixture_density(grid, bumps);
}

std::optional<Witness> beta_necessity_probe(StandardizedGenerator const &b,
                                            IndexTriple const &idx)
{
  double const beta = idx.beta();
  if (std::abs(beta) <= kBetaZero)
  {
    throw PreconditionViolation("beta necessity probe needs beta != 0");
  }
  double const c0 = UFunctionParams(idx).C0();
  double const c  = idx.C();
  // beta > 0: B'(t)^-beta blows up as t -> 0; beta < 0: as t -> inf
  double const direction = beta > 0.0 ? -1.0 : 1.0;

  constexpr int kStepsPerDecade = 4;
  constexpr int kDecades        = 12;
  constexpr int kTrend          = 5;

  int    streak = 0;
  double prev   = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kStepsPerDecade * kDecades; ++k)
  {
    double const theta = std::pow(10.0, direction * k / static_cast<double>(kStepsPerDecade));
    double const bpt   = b.deriv1(theta);
    if (!std::isfinite(bpt) || !(bpt > 0.0))
    {
      break;
    }
    double const excess = c * std::pow(bpt, -beta) - c0;
    if (!std::isfinite(excess))
    {
      break;
    }
    streak = excess > prev ? streak + 1 : 0;
    prev   = excess;
    if (streak >= kTrend && excess > kClosedFormTolerance)
    {
      Witness w;
      w.kind  = WitnessKind::theta_defect;
      w.theta = theta;
      w.value = excess;
      w.stage = beta > 0.0 ? "beta-necessity (theta -> 0)" : "beta-necessity (theta -> inf)";
      return w;
    }
  }
  return std::nullopt;
}

std::string SearchResult::status() const
{
  return witness ? "witness" : "consistent-with-LBF (search not a proof)";
}

SearchResult counterexample_search(StandardizedGenerator const &b, IndexTriple const &idx,
                                   SearchOptions const &opts)
{
  SearchResult out;
  auto eval = [&](DensitySpec const &gs, DensitySpec const &fs) -> std::optional<double> {
    try
    {
      auto const g = gs.materialize();
      auto const f = fs.materialize();
      ++out.evaluated;
      return log_bregman(b, g, f, idx).value;
    }
    catch (DegenerateIntegral const &)
    {
      ++out.skipped;
      return std::nullopt;
    }
  };
  double const negative = -10.0 * kQuadratureTolerance;

  for (double theta : opts.thetas)
  {
    auto const spec = uniform_spec(theta, padded_grid(0.0, 1.0 / theta, opts.nodes));
    auto const v    = eval(spec, spec);
    if (v && std::abs(*v) > kSearchTolerance)
    {
      out.witness = Witness{WitnessKind::zero_without_equality, theta, spec, spec, *v,
                            "uniform f = g"};
      return out;
    }
  }

  for (double tf : opts.pair_thetas)
  {
    for (double tg : opts.pair_thetas)
    {
      if (tf == tg)
      {
        continue;
      }
      Grid const grid = padded_grid(0.0, 1.0 / std::min(tf, tg), opts.nodes);
      auto const fs   = uniform_spec(tf, grid);
      auto const gs   = uniform_spec(tg, grid);
      auto const v    = eval(gs, fs);
      if (v && *v < negative)
      {
        out.witness = Witness{WitnessKind::negativity, std::nullopt, fs, gs, *v, "uniform pair"};
        return out;
      }
    }
  }

  std::mt19937_64 rng(opts.seed);
  Grid const      grid = Grid::make(-8.0, 8.0, opts.nodes);
  for (std::size_t i = 0; i < opts.random_pairs; ++i)
  {
    auto const fs = random_mixture(rng, grid);
    auto const gs = random_mixture(rng, grid);
    if (auto const v = eval(fs, fs); v && std::abs(*v) > kSearchTolerance)
    {
      out.witness = Witness{WitnessKind::zero_without_equality, std::nullopt, fs, fs, *v,
                            "random mixture f = g"};
      return out;
    }
    if (auto const v = eval(gs, fs); v && *v < negative)
    {
      out.witness = Witness{WitnessKind::negativity, std::nullopt, fs, gs, *v, "random mixture pair"};
      return out;
    }
  }
  return out;
}

PowerGenerator solve_lbf_family(double gamma, double K)
{
  if (!(gamma > 0.0 && gamma < 1.0))
  {
    throw ParameterError("gamma must lie in (0, 1); exponent 1/gamma must exceed 1");
  }
  if (!(K > 0.0) || !std::isfinite(K))
  {
    throw ParameterError("K must be positive");
  }
  return PowerGenerator{K, 1.0 / gamma - 1.0, 0.0, 0.0};
}

IndexTriple matched_triple(double gamma, double a0)
{
  if (!(gamma > 0.0 && gamma < 1.0))
  {
    throw ParameterError("gamma must lie in (0, 1)");
  }
  double const a2 = gamma * a0 / (1.0 - gamma);
  return IndexTriple(a0, a0 + a2, a2);
}

}  // namespace divkit
