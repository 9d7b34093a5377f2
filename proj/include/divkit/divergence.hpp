#pragma once
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

// Bregman, density power, logarithmic density power and general
// logarithmic-Bregman divergences between grid densities.

#include "divkit/density.hpp"
#include "divkit/generator.hpp"

#include <string>
#include <vector>

namespace divkit {

/// Quadrature tolerance used for every ">= 0" and "= 0 iff" claim.
inline constexpr double kQuadratureTolerance = 1e-9;

/// Smallest alpha accepted by dpd() and ldpd().
inline constexpr double kMinAlpha = 1e-6;

/// Positive weights (a0, a1, a2) of the three log terms.
class IndexTriple
{
public:
  IndexTriple(double a0, double a1, double a2);

  /// (1, (1 + alpha) / alpha, 1 / alpha), the triple that turns the
  /// standardized DPD generator into the LDPD.
  static IndexTriple ldpd(double alpha);

  double a0() const noexcept
  {
    return a0_;
  }
  double a1() const noexcept
  {
    return a1_;
  }
  double a2() const noexcept
  {
    return a2_;
  }

  /// a0 + a2 - a1
  double beta() const noexcept
  {
    return a0_ + a2_ - a1_;
  }

  /// a0^a0 a2^a2 / a1^a1
  double C() const;

private:
  double a0_, a1_, a2_;
};

struct DivergenceValue
{
  double              value{0.0};
  std::vector<double> terms;  // (I0, I1, I2) for log forms, the single integral otherwise
  std::string         note;   // set when value is +inf

  bool finite() const noexcept;
};

/// integral of B(g) - B(f) - B'(f)(g - f)
DivergenceValue bregman(StandardizedGenerator const &b, GridDensity const &g, GridDensity const &f);

/// integral of f^{1+a} - (1 + 1/a) f^a g + (1/a) g^{1+a}; alpha > kMinAlpha.
DivergenceValue dpd(GridDensity const &g, GridDensity const &f, double alpha);

/// integral of g log(g / f); +inf when g > 0 at a node where f = 0.
DivergenceValue kl(GridDensity const &g, GridDensity const &f);

/// log int f^{1+a} - ((1+a)/a) log int f^a g + (1/a) log int g^{1+a}.
/// terms = (int f^{1+a}, int f^a g, int g^{1+a}); +inf with note
/// "supports disjoint" when int f^a g = 0.
DivergenceValue ldpd(GridDensity const &g, GridDensity const &f, double alpha);

/// (int f^{1+a})^{a/(1+a)} (int g^{1+a})^{1/(1+a)} - int f^a g
double holder_gap(GridDensity const &g, GridDensity const &f, double alpha);

/// a0 log(I0/a0) + a2 log(I2/a2) - a1 log(I1/a1) with
/// I0 = int B'(f) f - B(f), I1 = int B'(f) g, I2 = int B(g).
///
/// Any triple is accepted, beta need not vanish. Throws DegenerateIntegral
/// naming the first integral that is <= 0 or not finite.
DivergenceValue log_bregman(StandardizedGenerator const &b, GridDensity const &g,
                            GridDensity const &f, IndexTriple const &idx);

/// max_i |f_i - g_i| < 1e-12 on a shared grid.
bool nodewise_identical(GridDensity const &f, GridDensity const &g);

}  // namespace divkit
