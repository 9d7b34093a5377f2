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

// Trapezoid-rule reductions over uniformly spaced samples.
//
// Every kernel exists as a scalar reference and, on x86-64, as an AVX2/FMA
// variant. The active table is picked once per process from CPUID; setting
// DIVKIT_FORCE_SCALAR=1 in the environment pins the scalar table. Variants
// agree up to reassociation of the sums (a few ulp per node).

#include <cstddef>
#include <span>

namespace divkit::kernels {

enum class Isa
{
  scalar,
  avx2
};

char const *to_string(Isa isa) noexcept;

struct KernelTable
{
  Isa isa;

  // step * (sum v - (v.front() + v.back()) / 2)
  double (*trapezoid)(std::span<double const> v, double step);

  // integral of a * b
  double (*trapezoid_product)(std::span<double const> a, std::span<double const> b, double step);

  // integral of a * b - c
  double (*trapezoid_product_minus)(std::span<double const> a, std::span<double const> b,
                                    std::span<double const> c, double step);

  // integral of (a - b)^2
  double (*trapezoid_sqdiff)(std::span<double const> a, std::span<double const> b, double step);

  // integral of bg - bf - dbf * (g - f)
  double (*trapezoid_bregman)(std::span<double const> bg, std::span<double const> bf,
                              std::span<double const> dbf, std::span<double const> g,
                              std::span<double const> f, double step);

  // max |a - b|, 0 for empty input
  double (*max_abs_diff)(std::span<double const> a, std::span<double const> b);
};

/// Table selected for this process.
KernelTable const &active();

/// True when `isa` can run on this CPU and was compiled in.
bool available(Isa isa) noexcept;

/// Table for a specific ISA. Throws std::runtime_error if unavailable.
KernelTable const &table(Isa isa);

namespace scalar {
KernelTable const &table() noexcept;
}

#if defined(DIVKIT_HAVE_AVX2)
namespace avx2 {
KernelTable const &table() noexcept;
}
#endif

}  // namespace divkit::kernels
