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

#include "divkit/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace divkit::kernels {

char const *to_string(Isa isa) noexcept
{
  switch (isa)
  {
  case Isa::scalar:
    return "scalar";
  case Isa::avx2:
    return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) noexcept
{
  switch (isa)
  {
  case Isa::scalar:
    return true;
  case Isa::avx2:
#if defined(DIVKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
  }
  return false;
}

KernelTable const &table(Isa isa)
{
  if (!available(isa))
  {
    throw std::runtime_error(std::string("kernel ISA not available: ") + to_string(isa));
  }
#if defined(DIVKIT_HAVE_AVX2)
  if (isa == Isa::avx2)
  {
    return avx2::table();
  }
#endif
  return scalar::table();
}

namespace {

KernelTable const &select()
{
  char const *force = std::getenv("DIVKIT_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0')
  {
    return scalar::table();
  }
  if (available(Isa::avx2))
  {
    return table(Isa::avx2);
  }
  return scalar::table();
}

}  // namespace

KernelTable const &active()
{
  static KernelTable const &chosen = select();
  return chosen;
}

}  // namespace divkit::kernels
