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

// Densities tabulated on uniform grids. Trapezoidal quadrature plays the role
// of Lebesgue integration throughout the library.

#include <cstddef>
#include <span>
#include <vector>

namespace divkit {

/// Nodes lo, lo + step, ..., hi with step = (hi - lo) / (n - 1).
struct Grid
{
  double      lo{0.0};
  double      hi{1.0};
  std::size_t n{2};

  /// Validates lo < hi (both finite) and n >= 2.
  static Grid make(double lo, double hi, std::size_t n);

  double step() const noexcept
  {
    return (hi - lo) / static_cast<double>(n - 1);
  }
  double x(std::size_t i) const noexcept
  {
    return i + 1 == n ? hi : lo + static_cast<double>(i) * step();
  }
  std::size_t nearest(double x) const noexcept;

  friend bool operator==(Grid const &, Grid const &) = default;
};

inline constexpr std::size_t kDefaultNodes = 4001;

/// Grid over [lo, hi] extended on the right by one step, so that hi is the
/// second to last node.
Grid padded_grid(double lo, double hi, std::size_t n = kDefaultNodes);

/// Trapezoid rule for the grid function h. Throws GridMismatch when
/// h.size() != grid.n.
double integrate(Grid const &grid, std::span<double const> h);

/// Nonnegative grid function with unit trapezoid integral (to 1e-9).
class GridDensity
{
public:
  /// Rescales raw >= 0 values to integral 1 (to 1e-12). Throws
  /// DegenerateDensity for negative, non-finite or all-zero input.
  static GridDensity normalize(Grid const &grid, std::vector<double> raw);

  /// Accepts values that already integrate to 1 within 1e-9.
  static GridDensity from_normalized(Grid const &grid, std::vector<double> values);

  Grid const &grid() const noexcept
  {
    return grid_;
  }
  std::span<double const> values() const noexcept
  {
    return values_;
  }
  double operator[](std::size_t i) const noexcept
  {
    return values_[i];
  }
  std::size_t size() const noexcept
  {
    return values_.size();
  }

  double integral() const;

private:
  GridDensity(Grid grid, std::vector<double> values);

  Grid                grid_;
  std::vector<double> values_;
};

/// Throws GridMismatch unless f and g live on the same grid.
void require_same_grid(GridDensity const &f, GridDensity const &g);

/// Discretized U(0, 1/theta): value theta from the node nearest 0 through the
/// node nearest 1/theta, zero elsewhere, then rescaled to integral exactly 1.
GridDensity uniform_density(double theta, Grid const &grid);

struct Bump
{
  double weight;
  double mean;
  double sd;
};

/// Normalized mixture of Gaussian bumps sampled on the grid.
GridDensity mixture_density(Grid const &grid, std::span<Bump const> bumps);

/// Linear interpolation of `d` onto `target` (zero outside d's interval),
/// renormalized.
struct Resampled
{
  GridDensity density;
  double      max_residual;  // max |d - interp(interp(d, target), d.grid)| over d's nodes
  double      raw_integral;  // integral on the target grid before renormalizing
};

Resampled resample(GridDensity const &d, Grid const &target);

/// Piecewise-linear interpolation of (grid, values) at x; 0 outside [lo, hi].
double interpolate(Grid const &grid, std::span<double const> values, double x);

}  // namespace divkit
