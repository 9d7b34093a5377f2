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

#include "divkit/generator.hpp"

#include "divkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace divkit {
namespace {

constexpr double kZeroSlopeStep = 1e-8;

std::string fmt(double x)
{
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

void require_positive(double x, char const *name)
{
  if (!(x > 0.0) || !std::isfinite(x))
  {
    throw ParameterError(std::string(name) + " must be positive and finite, got " + fmt(x));
  }
}

}  // namespace

ConvexGenerator::ConvexGenerator(std::string label, GeneratorFns fns,
                                 std::optional<GeneratorFns> reduced)
  : label_(std::move(label))
  , fns_(std::move(fns))
  , reduced_(std::move(reduced))
{
  if (!fns_.value || !fns_.slope || !fns_.curvature)
  {
    throw ParameterError("generator '" + label_ + "' needs B, B' and B''");
  }
}

ConvexGenerator ConvexGenerator::from_functions(std::string label, ScalarFn value, ScalarFn slope,
                                                ScalarFn curvature)
{
  if (!value || !slope)
  {
    throw ParameterError("generator '" + label + "' needs at least B and B'");
  }
  if (!curvature)
  {
    curvature = [slope](double y) {
      double const h = 1e-5 * std::max(1.0, y);
      if (y < h)
      {
        return (slope(y + h) - slope(y)) / h;
      }
      return (slope(y + h) - slope(y - h)) / (2.0 * h);
    };
  }
  ConvexGenerator g(std::move(label), {std::move(value), std::move(slope), std::move(curvature)});
  g.numeric_zero_slope_ = true;
  return g;
}

double ConvexGenerator::right_slope_at_zero() const
{
  if (numeric_zero_slope_)
  {
    return (eval(kZeroSlopeStep) - eval(0.0)) / kZeroSlopeStep;
  }
  return deriv1(0.0);
}

StandardizedGenerator::StandardizedGenerator(ConvexGenerator inner, double b0, double bp0)
  : inner_(std::move(inner))
  , b0_(b0)
  , bp0_(bp0)
{}

double StandardizedGenerator::eval(double y) const
{
  if (y == 0.0)
  {
    return 0.0;
  }
  if (auto const &r = inner_.reduced_form())
  {
    return r->value(y);
  }
  return inner_.eval(y) - b0_ - bp0_ * y;
}

double StandardizedGenerator::deriv1(double y) const
{
  if (y == 0.0)
  {
    return 0.0;
  }
  if (auto const &r = inner_.reduced_form())
  {
    return r->slope(y);
  }
  return inner_.deriv1(y) - bp0_;
}

ConvexGenerator StandardizedGenerator::as_generator() const
{
  auto self = *this;
  GeneratorFns fns{[self](double y) { return self.eval(y); },
                   [self](double y) { return self.deriv1(y); },
                   [self](double y) { return self.deriv2(y); }};
  return ConvexGenerator(inner_.label(), fns, fns);
}

StandardizedGenerator StandardizedGenerator::scaled(double factor) const
{
  require_positive(factor, "scale factor");
  auto self = *this;
  GeneratorFns fns{[self, factor](double y) { return factor * self.eval(y); },
                   [self, factor](double y) { return factor * self.deriv1(y); },
                   [self, factor](double y) { return factor * self.deriv2(y); }};
  return StandardizedGenerator(ConvexGenerator(fmt(factor) + "*" + inner_.label(), fns, fns), 0.0,
                               0.0);
}

StandardizedGenerator standardize(ConvexGenerator const &b)
{
  double const b0  = b.eval(0.0);
  double const bp0 = b.right_slope_at_zero();
  if (!std::isfinite(b0) || !std::isfinite(bp0))
  {
    throw NotStandardizable("generator not standardizable: '" + b.label() + "' has B(0) = " +
                            fmt(b0) + ", B'(0) = " + fmt(bp0));
  }
  return StandardizedGenerator(b, b0, bp0);
}

ConvexGenerator dpd_generator(double alpha)
{
  require_positive(alpha, "alpha");
  GeneratorFns fns{
      [alpha](double y) { return (std::pow(y, 1.0 + alpha) - y) / alpha; },
      [alpha](double y) { return ((1.0 + alpha) * std::pow(y, alpha) - 1.0) / alpha; },
      [alpha](double y) { return (1.0 + alpha) * std::pow(y, alpha - 1.0); }};
  GeneratorFns reduced{[alpha](double y) { return std::pow(y, 1.0 + alpha) / alpha; },
                       [alpha](double y) { return (1.0 + alpha) / alpha * std::pow(y, alpha); },
                       [alpha](double y) { return (1.0 + alpha) * std::pow(y, alpha - 1.0); }};
  return ConvexGenerator("dpd(alpha=" + fmt(alpha) + ")", fns, reduced);
}

ConvexGenerator PowerGenerator::generator() const
{
  require_positive(K, "K");
  require_positive(alpha, "alpha");
  if (!std::isfinite(K2) || !std::isfinite(K3))
  {
    throw ParameterError("K2 and K3 must be finite");
  }
  double const k = K, a = alpha, k2 = K2, k3 = K3;
  GeneratorFns reduced{[k, a](double y) { return k * std::pow(y, 1.0 + a); },
                       [k, a](double y) { return k * (1.0 + a) * std::pow(y, a); },
                       [k, a](double y) { return k * a * (1.0 + a) * std::pow(y, a - 1.0); }};
  GeneratorFns fns{[k, a, k2, k3](double y) { return k * std::pow(y, 1.0 + a) + k2 * y + k3; },
                   [k, a, k2](double y) { return k * (1.0 + a) * std::pow(y, a) + k2; },
                   reduced.curvature};
  std::string label = "power(K=" + fmt(k) + ",alpha=" + fmt(a);
  if (k2 != 0.0 || k3 != 0.0)
  {
    label += ",K2=" + fmt(k2) + ",K3=" + fmt(k3);
  }
  return ConvexGenerator(label + ")", fns, reduced);
}

ConvexGenerator power_generator(double K, double alpha, double K2, double K3)
{
  return PowerGenerator{K, alpha, K2, K3}.generator();
}

ConvexGenerator exp_generator()
{
  GeneratorFns fns{[](double y) { return std::expm1(y) - y; },
                   [](double y) { return std::expm1(y); }, [](double y) { return std::exp(y); }};
  return ConvexGenerator("exp", fns, fns);
}

ConvexGenerator cosh_generator()
{
  GeneratorFns fns{[](double y) {
                     double const s = std::sinh(0.5 * y);
                     return 2.0 * s * s;
                   },
                   [](double y) { return std::sinh(y); }, [](double y) { return std::cosh(y); }};
  return ConvexGenerator("cosh", fns, fns);
}

ConvexGenerator shifted_log_generator()
{
  GeneratorFns fns{[](double y) { return (1.0 + y) * std::log1p(y) - y; },
                   [](double y) { return std::log1p(y); },
                   [](double y) { return 1.0 / (1.0 + y); }};
  return ConvexGenerator("shiftedlog", fns, fns);
}

ConvexGenerator affine_shift(ConvexGenerator const &b, double slope, double offset)
{
  if (!std::isfinite(slope) || !std::isfinite(offset))
  {
    throw ParameterError("affine shift coefficients must be finite");
  }
  GeneratorFns fns{[b, slope, offset](double y) { return b.eval(y) + slope * y + offset; },
                   [b, slope](double y) { return b.deriv1(y) + slope; },
                   [b](double y) { return b.deriv2(y); }};
  std::optional<GeneratorFns> reduced = b.reduced_form();
  std::string label = b.label() + "+(" + fmt(slope) + "*y+" + fmt(offset) + ")";
  if (!reduced)
  {
    auto base = standardize(b);
    reduced   = GeneratorFns{[base](double y) { return base.eval(y); },
                           [base](double y) { return base.deriv1(y); },
                           [base](double y) { return base.deriv2(y); }};
  }
  return ConvexGenerator(std::move(label), fns, reduced);
}

TailEstimate tail_slope(StandardizedGenerator const &b, double probe_max)
{
  require_positive(probe_max, "probe_max");
  double const s1 = b.deriv1(0.25 * probe_max);
  double const s2 = b.deriv1(0.5 * probe_max);
  double const s3 = b.deriv1(probe_max);
  TailEstimate out{false, s3};
  if (!std::isfinite(s3))
  {
    out.divergent = true;
    return out;
  }
  if (s2 > 0.0 && s3 / s2 > 1.5)
  {
    out.divergent = true;
    return out;
  }
  double const last = s3 - s2;
  double const prev = s2 - s1;
  if (last <= 1e-12 * std::abs(s3))
  {
    return out;
  }
  out.divergent = last > 0.75 * prev;
  return out;
}

}  // namespace divkit
