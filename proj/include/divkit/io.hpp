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

// File formats: density CSV, generator JSON, report and witness JSON/CSV.

#include "divkit/characterization.hpp"
#include "divkit/density.hpp"
#include "divkit/divergence.hpp"
#include "divkit/generator.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace divkit::io {

inline constexpr char const *kSchema = "divkit/1";

struct LoadedDensity
{
  GridDensity              density;
  double                   raw_integral;
  std::vector<std::string> warnings;
};

/// CSV with header `x,value`, strictly increasing x equispaced to 1e-9
/// relative and nonnegative values. The result is normalized; a warning is
/// recorded when the raw integral is off by more than 1e-3. Throws FormatError.
LoadedDensity parse_density_csv(std::istream &in, std::string const &source = "<stream>");
LoadedDensity load_density_csv(std::filesystem::path const &path);

void write_density_csv(std::ostream &out, GridDensity const &d);
void save_density_csv(std::filesystem::path const &path, GridDensity const &d);

/// {"kind": "dpd"|"power"|"exp"|"cosh"|"shiftedlog", "params": {...}}.
/// dpd takes alpha; power takes alpha and optional K (default 1), K2, K3.
ConvexGenerator generator_from_json(nlohmann::json const &spec);
ConvexGenerator load_generator_json(std::filesystem::path const &path);

nlohmann::json to_json(DivergenceValue const &v, std::string const &name);
nlohmann::json to_json(DiagnosticReport const &r);
nlohmann::json to_json(DensitySpec const &s);
nlohmann::json to_json(Witness const &w);

/// Columns theta, ratio, defect, identity_defect.
void write_report_csv(std::ostream &out, DiagnosticReport const &r);

/// +inf / -inf / nan as strings, finite values as numbers.
nlohmann::json number(double x);

}  // namespace divkit::io
