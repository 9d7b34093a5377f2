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

// Convex generators B on [0, inf) together with B' and B''.

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace divkit {

using ScalarFn = std::function<double(double)>;

/// Evaluation triple (B, B', B'').
struct GeneratorFns
{
  ScalarFn value;
  ScalarFn slope;
  ScalarFn curvature;
};

/// Points used for derivative and standardization checks.
inline constexpr std::array<double, 6> kProbeGrid{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

/// A twice differentiable, strictly convex B on [0, inf).
///
/// `deriv1(0)` is the right-hand derivative. A generator may carry its exact
/// reduced form B(y) - B(0) - B'(0) y; built-ins always do, which lets
/// standardize() drop the affine part algebraically instead of by subtraction.
class ConvexGenerator
{
public:
  ConvexGenerator(std::string label, GeneratorFns fns, std::optional<GeneratorFns> reduced = {});

  /// Generator from user procedures. Missing B'' is a central difference of
  /// B' with step 1e-5 * max(1, y) (forward difference near 0). B'(0) used
  /// for standardization is the one-sided difference (B(1e-8) - B(0)) / 1e-8.
  static ConvexGenerator from_functions(std::string label, ScalarFn value, ScalarFn slope,
                                        ScalarFn curvature = {});

  double eval(double y) const
  {
    return fns_.value(y);
  }
  double deriv1(double y) const
  {
    return fns_.slope(y);
  }
  double deriv2(double y) const
  {
    return fns_.curvature(y);
  }

  std::string const &label() const noexcept
  {
    return label_;
  }

  /// Right derivative at zero as used by standardize().
  double right_slope_at_zero() const;

  std::optional<GeneratorFns> const &reduced_form() const noexcept
  {
    return reduced_;
  }

  GeneratorFns const &functions() const noexcept
  {
    return fns_;
  }

private:
  std::string                 label_;
  GeneratorFns                fns_;
  std::optional<GeneratorFns> reduced_;
  bool                        numeric_zero_slope_{false};
};

/// B* = B - B(0) - B'(0) y, the representative with B*(0) = 0 = B*'(0).
class StandardizedGenerator
{
public:
  double eval(double y) const;
  double deriv1(double y) const;
  double deriv2(double y) const
  {
    return inner_.deriv2(y);
  }

  ConvexGenerator const &inner() const noexcept
  {
    return inner_;
  }
  double b0() const noexcept
  {
    return b0_;
  }
  double bp0() const noexcept
  {
    return bp0_;
  }
  std::string const &label() const noexcept
  {
    return inner_.label();
  }

  /// B* itself as a generator; standardizing it again is the identity.
  ConvexGenerator as_generator() const;

  /// K * B*, K > 0.
  StandardizedGenerator scaled(double factor) const;

private:
  StandardizedGenerator(ConvexGenerator inner, double b0, double bp0);

  ConvexGenerator inner_;
  double          b0_;
  double          bp0_;

  friend StandardizedGenerator standardize(ConvexGenerator const &b);
};

/// Throws NotStandardizable when B(0) or B'(0) is not finite.
StandardizedGenerator standardize(ConvexGenerator const &b);

/// (y^{1+alpha} - y) / alpha.
ConvexGenerator dpd_generator(double alpha);

/// K y^{1+alpha} + K2 y + K3.
struct PowerGenerator
{
  double K{1.0};
  double alpha{1.0};
  double K2{0.0};
  double K3{0.0};

  /// Validates K > 0 and alpha > 0.
  ConvexGenerator generator() const;
};

ConvexGenerator power_generator(double K, double alpha, double K2 = 0.0, double K3 = 0.0);
ConvexGenerator exp_generator();         // e^y - y - 1
ConvexGenerator cosh_generator();        // cosh y - 1
ConvexGenerator shifted_log_generator(); // (1 + y) log(1 + y) - y

/// B(y) + slope * y + offset; generates the same Bregman divergence.
ConvexGenerator affine_shift(ConvexGenerator const &b, double slope, double offset);

struct TailEstimate
{
  bool   divergent{false};
  double slope{0.0};  // B*'(probe_max), the estimate of lim B*(y)/y
};

/// Classifies lim_{y->inf} B*(y)/y from B*' at probe_max/4, probe_max/2 and
/// probe_max: divergent when the slope still grows by more than 1.5x over the
/// last doubling or its increments are not decaying.
TailEstimate tail_slope(StandardizedGenerator const &b, double probe_max);

}  // namespace divkit
