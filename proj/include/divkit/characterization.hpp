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

// Numerical diagnostics for logarithmic Bregman functions (LBFs): the
// uniform-density identity, the u-function bound, the beta = 0 necessity
// probe, theta scans and a seeded counterexample search.

#include "divkit/density.hpp"
#include "divkit/divergence.hpp"
#include "divkit/generator.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace divkit {

/// Tolerance for closed-form (quadrature-free) defects.
inline constexpr double kClosedFormTolerance = 1e-8;
/// Tolerance for defects computed through quadrature.
inline constexpr double kSearchTolerance = 1e-6;

/// u(x) = (1 - x)^a0 x^a2 on [0, 1].
class UFunctionParams
{
public:
  UFunctionParams(double a0, double a2);
  explicit UFunctionParams(IndexTriple const &idx)
    : UFunctionParams(idx.a0(), idx.a2())
  {}

  double a0() const noexcept
  {
    return a0_;
  }
  double a2() const noexcept
  {
    return a2_;
  }
  /// argmax of u, a2 / (a0 + a2)
  double gamma() const noexcept
  {
    return a2_ / (a0_ + a2_);
  }
  /// max of u, a0^a0 a2^a2 / (a0 + a2)^(a0 + a2)
  double C0() const;

private:
  double a0_, a2_;
};

/// Throws ParameterError for x outside [0, 1].
double u(double x, UFunctionParams const &p);

/// (B'(t) - B(t)/t)^a0 (B(t)/t)^a2 - C B'(t)^a1 with closed-form uniform
/// integrals; zero for every t when B is an LBF for idx.
double uniform_identity_defect(StandardizedGenerator const &b, double theta, IndexTriple const &idx);

/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

enum class Verdict
{
  consistent,
  refuted
};

char const *to_string(Verdict v) noexcept;

struct DiagnosticReport
{
  std::string         generator;
  double              a0{}, a1{}, a2{};
  double              beta{};
  bool                beta_zero{};  // defects are u(ratio) - C0, else C B'^-beta - u(ratio)
  std::vector<double> thetas;
  std::vector<double> ratios;            // B(t) / (t B'(t))
  std::vector<double> defects;
  std::vector<double> identity_defects;  // uniform_identity_defect per t
  Verdict             verdict{Verdict::consistent};
  double              worst_theta{};
  double              worst_defect{};
  double              tolerance{kClosedFormTolerance};
  std::vector<std::string> warnings;
};

/// Probes whose B or B' is not finite are dropped with a warning.
DiagnosticReport theta_scan(StandardizedGenerator const &b, IndexTriple const &idx,
                            std::span<double const> thetas,
                            double tolerance = kClosedFormTolerance);

/// Default probe grid: 200 log-spaced points in [1e-3, 1e3].
DiagnosticReport theta_scan(StandardizedGenerator const &b, IndexTriple const &idx);

enum class WitnessKind
{
  theta_defect,
  negativity,
  zero_without_equality
};

char const *to_string(WitnessKind k) noexcept;

/// Recipe for a density used by a witness.
struct DensitySpec
{
  enum class Family
  {
    uniform,
    bump_mixture
  };
  Family            family{Family::uniform};
  Grid              grid;
  double            theta{};  // uniform
  std::vector<Bump> bumps;    // bump_mixture

  GridDensity materialize() const;
};

struct Witness
{
  WitnessKind                kind{WitnessKind::theta_defect};
  std::optional<double>      theta;
  std::optional<DensitySpec> f_spec;
  std::optional<DensitySpec> g_spec;
  double                     value{};
  std::string                stage;  // which probe produced it
};

/// Looks for t with C B'(t)^-beta > C0 + kClosedFormTolerance, walking toward
/// 0 when beta > 0 and toward infinity when beta < 0 over [1e-12, 1e12], and
/// only accepts it once the excess has grown over 5 consecutive probes.
/// Throws PreconditionViolation when beta = 0.
std::optional<Witness> beta_necessity_probe(StandardizedGenerator const &b,
                                            IndexTriple const &idx);

struct SearchOptions
{
  std::uint64_t       seed{42};
  std::vector<double> thetas{log_grid(1e-3, 1e3, 200)};
  std::vector<double> pair_thetas{log_grid(1e-1, 1e1, 30)};
  std::size_t         random_pairs{100};
  std::size_t         nodes{kDefaultNodes};
};

struct SearchResult
{
  std::optional<Witness> witness;
  std::size_t            evaluated{};
  std::size_t            skipped{};  // candidates with a degenerate integral

  /// "witness" or "consistent-with-LBF (search not a proof)"
  std::string status() const;
};

/// Tries, in order, f = g = U(0, 1/t) over opts.thetas, uniform pairs over
/// opts.pair_thetas and seeded random two-bump mixtures, stopping at the
/// first witness. Deterministic for a fixed seed.
SearchResult counterexample_search(StandardizedGenerator const &b, IndexTriple const &idx,
                                   SearchOptions const &opts = {});

/// Solution K t^{1/gamma} of B(t) = gamma t B'(t); 0 < gamma < 1.
PowerGenerator solve_lbf_family(double gamma, double K = 1.0);

/// (a0, a0 + a2, a2) with a2 / (a0 + a2) = gamma.
IndexTriple matched_triple(double gamma, double a0 = 1.0);

}  // namespace divkit
