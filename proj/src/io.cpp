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

#include "divkit/io.hpp"

#include "divkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace divkit::io {
namespace {

std::string trim(std::string s)
{
  auto const not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_double(std::string const &text, std::string const &where)
{
  std::string const t     = trim(text);
  double            value = 0.0;
  auto const [ptr, ec]    = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
  {
    throw FormatError(where + ": cannot parse number '" + t + "'");
  }
  return value;
}

std::string g17(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double param(nlohmann::json const &params, char const *name, std::optional<double> fallback)
{
  if (!params.contains(name))
  {
    if (fallback)
    {
      return *fallback;
    }
    throw FormatError(std::string("generator spec: missing parameter '") + name + "'");
  }
  auto const &v = params.at(name);
  if (!v.is_number())
  {
    throw FormatError(std::string("generator spec: parameter '") + name + "' must be a number");
  }
  return v.get<double>();
}

void only_params(nlohmann::json const &params, std::set<std::string> const &allowed,
                 std::string const &kind)
{
  for (auto const &[key, value] : params.items())
  {
    if (!allowed.contains(key))
    {
      throw FormatError("generator spec: '" + kind + "' does not take parameter '" + key + "'");
    }
  }
}

nlohmann::json vec(std::vector<double> const &v)
{
  auto out = nlohmann::json::array();
  for (double x : v)
  {
    out.push_back(number(x));
  }
  return out;
}

}  // namespace

nlohmann::json number(double x)
{
  if (std::isnan(x))
  {
    return "nan";
  }
  if (std::isinf(x))
  {
    return x > 0 ? "+inf" : "-inf";
  }
  return x;
}

LoadedDensity parse_density_csv(std::istream &in, std::string const &source)
{
  std::string line;
  if (!std::getline(in, line) || trim(line) != "x,value")
  {
    throw FormatError(source + ": expected header 'x,value'");
  }
  std::vector<double> xs, vs;
  std::size_t         lineno = 1;
  while (std::getline(in, line))
  {
    ++lineno;
    if (trim(line).empty())
    {
      continue;
    }
    auto const comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
    {
      throw FormatError(source + ":" + std::to_string(lineno) + ": expected 'x,value'");
    }
    std::string const where = source + ":" + std::to_string(lineno);
    xs.push_back(parse_double(line.substr(0, comma), where));
    vs.push_back(parse_double(line.substr(comma + 1), where));
    if (!std::isfinite(xs.back()) || !std::isfinite(vs.back()))
    {
      throw FormatError(where + ": non-finite entry");
    }
    if (vs.back() < 0.0)
    {
      throw FormatError(where + ": negative density value");
    }
  }
  if (xs.size() < 2)
  {
    throw FormatError(source + ": need at least two rows");
  }
  double const step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 1; i < xs.size(); ++i)
  {
    double const dx = xs[i] - xs[i - 1];
    if (!(dx > 0.0))
    {
      throw FormatError(source + ": x must be strictly increasing (row " + std::to_string(i + 2) +
                        ")");
    }
    if (std::abs(dx - step) > 1e-9 * step)
    {
      throw FormatError(source + ": x is not equispaced (row " + std::to_string(i + 2) + ")");
    }
  }
  Grid const   grid = Grid::make(xs.front(), xs.back(), xs.size());
  double const raw  = integrate(grid, vs);
  std::vector<std::string> warnings;
  if (std::abs(raw - 1.0) > 1e-3)
  {
    warnings.push_back(source + ": raw integral " + g17(raw) + " deviates from 1; normalized");
  }
  try
  {
    return LoadedDensity{GridDensity::normalize(grid, std::move(vs)), raw, std::move(warnings)};
  }
  catch (DegenerateDensity const &e)
  {
    throw FormatError(source + ": " + e.what());
  }
}

LoadedDensity load_density_csv(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw FormatError("cannot open density file " + path.string());
  }
  return parse_density_csv(in, path.string());
}

void write_density_csv(std::ostream &out, GridDensity const &d)
{
  out << "x,value\n";
  Grid const &g = d.grid();
  for (std::size_t i = 0; i < d.size(); ++i)
  {
    out << g17(g.x(i)) << ',' << g17(d[i]) << '\n';
  }
}

void save_density_csv(std::filesystem::path const &path, GridDensity const &d)
{
  std::ofstream out(path);
  if (!out)
  {
    throw FormatError("cannot write " + path.string());
  }
  write_density_csv(out, d);
}

ConvexGenerator generator_from_json(nlohmann::json const &spec)
{
  if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string())
  {
    throw FormatError("generator spec: expected an object with a string 'kind'");
  }
  std::string const kind   = spec.at("kind").get<std::string>();
  nlohmann::json    params = spec.value("params", nlohmann::json::object());
  if (!params.is_object())
  {
    throw FormatError("generator spec: 'params' must be an object");
  }
  try
  {
    if (kind == "dpd")
    {
      only_params(params, {"alpha"}, kind);
      return dpd_generator(param(params, "alpha", std::nullopt));
    }
    if (kind == "power")
    {
      only_params(params, {"K", "alpha", "K2", "K3"}, kind);
      return power_generator(param(params, "K", 1.0), param(params, "alpha", std::nullopt),
                             param(params, "K2", 0.0), param(params, "K3", 0.0));
    }
    only_params(params, {}, kind);
    if (kind == "exp")
    {
      return exp_generator();
    }
    if (kind == "cosh")
    {
      return cosh_generator();
    }
    if (kind == "shiftedlog")
    {
      return shifted_log_generator();
    }
  }
  catch (ParameterError const &e)
  {
    throw FormatError(std::string("generator spec: ") + e.what());
  }
  throw FormatError("generator spec: unknown kind '" + kind + "'");
}

ConvexGenerator load_generator_json(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw FormatError("cannot open generator file " + path.string());
  }
  nlohmann::json spec;
  try
  {
    in >> spec;
  }
  catch (nlohmann::json::exception const &e)
  {
    throw FormatError(path.string() + ": " + e.what());
  }
  return generator_from_json(spec);
}

nlohmann::json to_json(DivergenceValue const &v, std::string const &name)
{
  nlohmann::json j{{"schema", kSchema}, {"divergence", name}, {"value", number(v.value)},
                   {"terms", vec(v.terms)}};
  if (!v.note.empty())
  {
    j["note"] = v.note;
  }
  return j;
}

nlohmann::json to_json(DiagnosticReport const &r)
{
  nlohmann::json verdict{{"status", to_string(r.verdict)},
                         {"worst_theta", number(r.worst_theta)},
                         {"defect", number(r.worst_defect)},
                         {"tolerance", r.tolerance}};
  return nlohmann::json{{"schema", kSchema},
                        {"generator", r.generator},
                        {"idx", {r.a0, r.a1, r.a2}},
                        {"beta", r.beta},
                        {"defect_kind", r.beta_zero ? "u(ratio)-C0" : "C*B'^-beta-u(ratio)"},
                        {"thetas", vec(r.thetas)},
                        {"ratios", vec(r.ratios)},
                        {"defects", vec(r.defects)},
                        {"identity_defects", vec(r.identity_defects)},
                        {"verdict", verdict},
                        {"warnings", r.warnings}};
}

nlohmann::json to_json(DensitySpec const &s)
{
  nlohmann::json j{{"grid", {s.grid.lo, s.grid.hi, s.grid.n}}};
  if (s.family == DensitySpec::Family::uniform)
  {
    j["family"] = "uniform";
    j["theta"]  = s.theta;
  }
  else
  {
    j["family"] = "bump-mixture";
    auto bumps  = nlohmann::json::array();
    for (Bump const &b : s.bumps)
    {
      bumps.push_back({{"weight", b.weight}, {"mean", b.mean}, {"sd", b.sd}});
    }
    j["bumps"] = bumps;
  }
  return j;
}

nlohmann::json to_json(Witness const &w)
{
  nlohmann::json j{{"kind", to_string(w.kind)}, {"value", number(w.value)}, {"stage", w.stage}};
  j["theta"]  = w.theta ? number(*w.theta) : nlohmann::json(nullptr);
  j["f_spec"] = w.f_spec ? to_json(*w.f_spec) : nlohmann::json(nullptr);
  j["g_spec"] = w.g_spec ? to_json(*w.g_spec) : nlohmann::json(nullptr);
  return j;
}

void write_report_csv(std::ostream &out, DiagnosticReport const &r)
{
  out << "theta,ratio,defect,identity_defect\n";
  for (std::size_t i = 0; i < r.thetas.size(); ++i)
  {
    out << g17(r.thetas[i]) << ',' << g17(r.ratios[i]) << ',' << g17(r.defects[i]) << ','
        << g17(r.identity_defects[i]) << '\n';
  }
}

}  // namespace divkit::io
