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

#include "divkit/density.hpp"

#include "divkit/error.hpp"
#include "divkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace divkit {
namespace {

std::string describe(Grid const &g)
{
  std::ostringstream os;
  os.precision(17);
  os << "[" << g.lo << ", " << g.hi << "] x " << g.n;
  return os.str();
}

}  // namespace

Grid Grid::make(double lo, double hi, std::size_t n)
{
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
  {
    throw ParameterError("grid needs finite lo < hi");
  }
  if (n < 2)
  {
    throw ParameterError("grid needs at least 2 nodes");
  }
  return Grid{lo, hi, n};
}

std::size_t Grid::nearest(double x) const noexcept
{
  double const t = std::round((x - lo) / step());
  if (t <= 0.0)
  {
    return 0;
  }
  return std::min(n - 1, static_cast<std::size_t>(t));
}

Grid padded_grid(double lo, double hi, std::size_t n)
{
  if (n < 3)
  {
    throw ParameterError("padded grid needs at least 3 nodes");
  }
  double const step = (hi - lo) / static_cast<double>(n - 2);
  return Grid::make(lo, hi + step, n);
}

double integrate(Grid const &grid, std::span<double const> h)
{
  if (h.size() != grid.n)
  {
    throw GridMismatch("grid function has " + std::to_string(h.size()) +
                       " samples, grid has " + std::to_string(grid.n));
  }
  return kernels::active().trapezoid(h, grid.step());
}

GridDensity::GridDensity(Grid grid, std::vector<double> values)
  : grid_(grid)
  , values_(std::move(values))
{}

double GridDensity::integral() const
{
  return integrate(grid_, values_);
}

GridDensity GridDensity::normalize(Grid const &grid, std::vector<double> raw)
{
  if (raw.size() != grid.n)
  {
    throw GridMismatch("density has " + std::to_string(raw.size()) + " values for grid " +
                       describe(grid));
  }
  for (std::size_t i = 0; i < raw.size(); ++i)
  {
    if (!std::isfinite(raw[i]) || raw[i] < 0.0)
    {
      throw DegenerateDensity("density value at node " + std::to_string(i) +
                              " is negative or not finite");
    }
  }
  double const total = integrate(grid, raw);
  if (!(total > 0.0))
  {
    throw DegenerateDensity("density integrates to zero");
  }
  double const scale = 1.0 / total;
  for (double &v : raw)
  {
    v *= scale;
  }
  return GridDensity(grid, std::move(raw));
}

GridDensity GridDensity::from_normalized(Grid const &grid, std::vector<double> values)
{
  if (values.size() != grid.n)
  {
    throw GridMismatch("density has " + std::to_string(values.size()) + " values for grid " +
                       describe(grid));
  }
  for (double v : values)
  {
    if (!std::isfinite(v) || v < 0.0)
    {
      throw DegenerateDensity("density values must be finite and nonnegative");
    }
  }
  double const total = integrate(grid, values);
  if (std::abs(total - 1.0) > 1e-9)
  {
    throw DegenerateDensity("density integrates to " + std::to_string(total) + ", not 1");
  }
  return GridDensity(grid, std::move(values));
}

void require_same_grid(GridDensity const &f, GridDensity const &g)
{
  if (!(f.grid() == g.grid()))
  {
    throw GridMismatch("densities live on different grids: " + describe(f.grid()) + " vs " +
                       describe(g.grid()));
  }
}

GridDensity uniform_density(double theta, Grid const &grid)
{
  if (!(theta > 0.0) || !std::isfinite(theta))
  {
    throw ParameterError("uniform density needs theta > 0");
  }
  double const width = 1.0 / theta;
  double const half  = 0.5 * grid.step();
  if (grid.lo > half || grid.hi < width - half)
  {
    throw ParameterError("grid " + describe(grid) + " does not cover [0, 1/theta]");
  }
  std::size_t const first = grid.nearest(0.0);
  std::size_t const last  = grid.nearest(width);
  if (last <= first)
  {
    throw ParameterError("support of U(0, 1/theta) is narrower than one grid step");
  }
  std::vector<double> raw(grid.n, 0.0);
  std::fill(raw.begin() + static_cast<std::ptrdiff_t>(first),
            raw.begin() + static_cast<std::ptrdiff_t>(last) + 1, theta);
  return GridDensity::normalize(grid, std::move(raw));
}

GridDensity mixture_density(Grid const &grid, std::span<Bump const> bumps)
{
  std::vector<double> raw(grid.n, 0.0);
  for (Bump const &b : bumps)
  {
    if (!(b.sd > 0.0) || !(b.weight >= 0.0))
    {
      throw ParameterError("bump needs sd > 0 and weight >= 0");
    }
    double const norm = b.weight / (b.sd * std::sqrt(2.0 * std::numbers::pi));
    for (std::size_t i = 0; i < grid.n; ++i)
    {
      double const z = (grid.x(i) - b.mean) / b.sd;
      raw[i] += norm * std::exp(-0.5 * z * z);
    }
  }
  return GridDensity::normalize(grid, std::move(raw));
}

double interpolate(Grid const &grid, std::span<double const> values, double x)
{
  if (x < grid.lo || x > grid.hi)
  {
    return 0.0;
  }
  double const t = (x - grid.lo) / grid.step();
  auto         i = static_cast<std::size_t>(std::floor(t));
  if (i >= grid.n - 1)
  {
    return values[grid.n - 1];
  }
  double const w = t - static_cast<double>(i);
  return (1.0 - w) * values[i] + w * values[i + 1];
}

Resampled resample(GridDensity const &d, Grid const &target)
{
  std::vector<double> raw(target.n);
  for (std::size_t i = 0; i < target.n; ++i)
  {
    raw[i] = interpolate(d.grid(), d.values(), target.x(i));
  }
  double residual = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
  {
    double const back = interpolate(target, raw, d.grid().x(i));
    residual          = std::max(residual, std::abs(back - d[i]));
  }
  double const raw_integral = integrate(target, raw);
  return Resampled{GridDensity::normalize(target, std::move(raw)), residual, raw_integral};
}

}  // namespace divkit
