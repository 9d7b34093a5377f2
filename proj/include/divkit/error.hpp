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

#include <stdexcept>
#include <string>

namespace divkit {

/// Bad scalar parameter (alpha <= 0, theta <= 0, gamma outside (0,1), ...).
class ParameterError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Two grid functions that do not share lo, hi and node count.
class GridMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Input that cannot be a density: negative or non-finite values, all zeros.
class DegenerateDensity : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// B(0) or B'(0) is not finite.
class NotStandardizable : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// A constituent integral of a log-form divergence is <= 0 or not finite.
class DegenerateIntegral : public std::domain_error
{
public:
  DegenerateIntegral(std::string term, std::string const &what)
    : std::domain_error(what)
    , term_(std::move(term))
  {}

  /// Name of the offending integral ("I0", "I1" or "I2").
  std::string const &term() const noexcept
  {
    return term_;
  }

private:
  std::string term_;
};

/// Operation called outside its documented precondition.
class PreconditionViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Malformed file content (CSV density, generator JSON).
class FormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace divkit
