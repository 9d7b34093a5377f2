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

// divkit: compute divergences between grid densities and run the logarithmic
// Bregman characterization diagnostics from the command line.
//
// Exit codes: 0 success / consistent, 1 refuted / witness found,
//             2 input error, 3 numeric degeneracy.

#include "divkit/characterization.hpp"
#include "divkit/divergence.hpp"
#include "divkit/error.hpp"
#include "divkit/io.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using divkit::FormatError;
using nlohmann::json;

enum Exit : int
{
  kOk        = 0,
  kRefuted   = 1,
  kBadInput  = 2,
  kDegenerate = 3
};

struct RunConfig
{
  std::string div;
  std::optional<double> alpha;
  std::string idx;
  std::string gen;
  std::string f_path;
  std::string g_path;
  std::string grid;
  std::string out;
  std::string format{"json"};
  std::uint64_t seed{42};
  std::string theta_range;
};

std::vector<double> parse_list(std::string const &text, std::size_t count, char const *flag)
{
  std::vector<double> out;
  std::stringstream   ss(text);
  std::string         item;
  while (std::getline(ss, item, ','))
  {
    double v        = 0.0;
    auto const *end = item.data() + item.size();
    auto const [ptr, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc() || ptr != end)
    {
      throw FormatError(std::string(flag) + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.size() != count)
  {
    throw FormatError(std::string(flag) + ": expected " + std::to_string(count) +
                      " comma-separated values");
  }
  return out;
}

divkit::IndexTriple parse_idx(std::string const &text)
{
  auto const v = parse_list(text, 3, "--idx");
  return divkit::IndexTriple(v[0], v[1], v[2]);
}

divkit::Grid parse_grid(std::string const &text)
{
  auto const v = parse_list(text, 3, "--grid");
  if (v[2] < 2 || v[2] != std::floor(v[2]))
  {
    throw FormatError("--grid: n must be an integer >= 2");
  }
  return divkit::Grid::make(v[0], v[1], static_cast<std::size_t>(v[2]));
}

void warn(std::string const &msg)
{
  std::cerr << "warning: " << msg << '\n';
}

divkit::GridDensity load(std::string const &path, char const *flag)
{
  if (path.empty())
  {
    throw FormatError(std::string(flag) + " is required");
  }
  auto loaded = divkit::io::load_density_csv(path);
  for (auto const &w : loaded.warnings)
  {
    warn(w);
  }
  return std::move(loaded.density);
}

divkit::GridDensity onto(divkit::GridDensity const &d, divkit::Grid const &grid, char const *name)
{
  if (d.grid() == grid)
  {
    return d;
  }
  auto r = divkit::resample(d, grid);
  std::ostringstream os;
  os.precision(6);
  os << name << " resampled onto a different grid by linear interpolation; max interpolation "
     << "residual " << r.max_residual << ", pre-normalization integral " << r.raw_integral;
  warn(os.str());
  return std::move(r.density);
}

void emit(RunConfig const &cfg, json const &j, std::string const &csv)
{
  std::cout << j.dump(2) << '\n';
  if (cfg.out.empty())
  {
    return;
  }
  std::ofstream out(cfg.out);
  if (!out)
  {
    throw FormatError("cannot write " + cfg.out);
  }
  if (cfg.format == "csv")
  {
    out << csv;
  }
  else
  {
    out << j.dump(2) << '\n';
  }
}

double require_alpha(RunConfig const &cfg)
{
  if (!cfg.alpha)
  {
    throw FormatError("--alpha is required for --div " + cfg.div);
  }
  return *cfg.alpha;
}

divkit::StandardizedGenerator require_gen(RunConfig const &cfg)
{
  if (cfg.gen.empty())
  {
    throw FormatError("--gen is required");
  }
  return divkit::standardize(divkit::io::load_generator_json(cfg.gen));
}

divkit::IndexTriple require_idx(RunConfig const &cfg)
{
  if (cfg.idx.empty())
  {
    throw FormatError("--idx is required");
  }
  return parse_idx(cfg.idx);
}

int cmd_compute(RunConfig const &cfg)
{
  auto f = load(cfg.f_path, "--f");
  auto g = load(cfg.g_path, "--g");
  if (!cfg.grid.empty())
  {
    auto const grid = parse_grid(cfg.grid);
    f               = onto(f, grid, "f");
    g               = onto(g, grid, "g");
  }
  else
  {
    g = onto(g, f.grid(), "g");
  }

  divkit::DivergenceValue v;
  if (cfg.div == "bregman")
  {
    v = divkit::bregman(require_gen(cfg), g, f);
  }
  else if (cfg.div == "dpd")
  {
    v = divkit::dpd(g, f, require_alpha(cfg));
  }
  else if (cfg.div == "ldpd")
  {
    v = divkit::ldpd(g, f, require_alpha(cfg));
  }
  else if (cfg.div == "kl")
  {
    v = divkit::kl(g, f);
  }
  else if (cfg.div == "logbregman")
  {
    v = divkit::log_bregman(require_gen(cfg), g, f, require_idx(cfg));
  }
  else
  {
    throw FormatError("unknown divergence '" + cfg.div + "'");
  }

  std::ostringstream csv;
  csv.precision(17);
  csv << "divergence,value";
  for (std::size_t i = 0; i < v.terms.size(); ++i)
  {
    csv << ",term" << i;
  }
  csv << '\n' << cfg.div << ',' << divkit::io::number(v.value).dump();
  for (double t : v.terms)
  {
    csv << ',' << t;
  }
  csv << '\n';
  emit(cfg, divkit::io::to_json(v, cfg.div), csv.str());
  return kOk;
}

int cmd_diagnose(RunConfig const &cfg)
{
  auto const b   = require_gen(cfg);
  auto const idx = require_idx(cfg);
  std::vector<double> thetas;
  if (cfg.theta_range.empty())
  {
    thetas = divkit::log_grid(1e-3, 1e3, 200);
  }
  else
  {
    auto const v = parse_list(cfg.theta_range, 3, "--theta-range");
    if (v[2] < 2 || v[2] != std::floor(v[2]))
    {
      throw FormatError("--theta-range: n must be an integer >= 2");
    }
    thetas = divkit::log_grid(v[0], v[1], static_cast<std::size_t>(v[2]));
  }

  auto const report = divkit::theta_scan(b, idx, thetas);
  for (auto const &w : report.warnings)
  {
    warn(w);
  }
  json j = divkit::io::to_json(report);

  bool refuted = report.verdict == divkit::Verdict::refuted;
  if (std::abs(idx.beta()) > 1e-12)
  {
    auto const witness      = divkit::beta_necessity_probe(b, idx);
    j["beta_necessity"]     = witness ? divkit::io::to_json(*witness) : json(nullptr);
    refuted                 = refuted || witness.has_value();
  }
  std::ostringstream csv;
  divkit::io::write_report_csv(csv, report);
  emit(cfg, j, csv.str());
  return refuted ? kRefuted : kOk;
}

int cmd_search(RunConfig const &cfg)
{
  auto const b   = require_gen(cfg);
  auto const idx = require_idx(cfg);
  if (cfg.out.empty())
  {
    throw FormatError("--out is required for search");
  }
  divkit::SearchOptions opts;
  opts.seed          = cfg.seed;
  auto const result  = divkit::counterexample_search(b, idx, opts);

  json j{{"schema", divkit::io::kSchema},
         {"generator", b.label()},
         {"idx", {idx.a0(), idx.a1(), idx.a2()}},
         {"seed", cfg.seed},
         {"status", result.status()},
         {"outcome", result.witness ? "witness" : "exhausted"},
         {"evaluated", result.evaluated},
         {"skipped", result.skipped}};
  if (result.witness)
  {
    auto const &w = *result.witness;
    json        wj = divkit::io::to_json(w);
    fs::path const out(cfg.out);
    fs::path const stem = out.parent_path() / out.stem();
    fs::path const fp   = stem.string() + ".f.csv";
    fs::path const gp   = stem.string() + ".g.csv";
    divkit::io::save_density_csv(fp, w.f_spec->materialize());
    divkit::io::save_density_csv(gp, w.g_spec->materialize());
    wj["f_path"] = fp.filename().string();
    wj["g_path"] = gp.filename().string();
    j["witness"] = wj;
  }
  else
  {
    j["witness"] = nullptr;
  }
  std::cout << j.dump(2) << '\n';
  std::ofstream out(cfg.out);
  if (!out)
  {
    throw FormatError("cannot write " + cfg.out);
  }
  out << j.dump(2) << '\n';
  return result.witness ? kRefuted : kOk;
}

int cmd_limit_check(RunConfig const &cfg)
{
  auto       f = load(cfg.f_path, "--f");
  auto const g = onto(load(cfg.g_path, "--g"), f.grid(), "g");
  auto const k = divkit::kl(g, f);
  if (!k.finite())
  {
    throw divkit::DegenerateIntegral("kl", "kl(g, f) is infinite; the limit check needs f > 0 "
                                           "wherever g > 0");
  }
  std::vector<double> const alphas{1e-1, 1e-2, 1e-3, 1e-4};
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "alpha,dpd,ldpd,kl,dpd_gap,ldpd_gap\n";
  double prev_d = INFINITY, prev_l = INFINITY;
  bool   monotone = true;
  double last_d = 0.0, last_l = 0.0;
  for (double a : alphas)
  {
    double const d  = divkit::dpd(g, f, a).value;
    double const l  = divkit::ldpd(g, f, a).value;
    double const gd = std::abs(d - k.value);
    double const gl = std::abs(l - k.value);
    monotone        = monotone && gd < prev_d && gl < prev_l;
    prev_d = last_d = gd;
    prev_l = last_l = gl;
    rows.push_back({{"alpha", a}, {"dpd", d}, {"ldpd", l}, {"dpd_gap", gd}, {"ldpd_gap", gl}});
    csv << a << ',' << d << ',' << l << ',' << k.value << ',' << gd << ',' << gl << '\n';
  }
  bool const ok = monotone && last_d < 1e-3 && last_l < 1e-3;
  json j{{"schema", divkit::io::kSchema}, {"kl", k.value},      {"rows", rows},
         {"monotone", monotone},           {"tolerance", 1e-3}, {"converged", ok}};
  emit(cfg, j, csv.str());
  return ok ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"divkit: Bregman / DPD / LDPD divergences and logarithmic Bregman diagnostics"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--out", cfg.out, "Output path");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_gen_idx = [&](CLI::App *sub) {
    sub->add_option("--gen", cfg.gen, "Generator JSON")->required();
    sub->add_option("--idx", cfg.idx, "Index triple a0,a1,a2")->required();
  };

  auto *compute = app.add_subcommand("compute", "Evaluate one divergence between two densities");
  compute->add_option("--div", cfg.div, "Divergence")
      ->required()
      ->check(CLI::IsMember({"bregman", "dpd", "ldpd", "kl", "logbregman"}));
  compute->add_option("--alpha", cfg.alpha, "Tuning parameter for dpd/ldpd");
  compute->add_option("--idx", cfg.idx, "Index triple a0,a1,a2 for logbregman");
  compute->add_option("--gen", cfg.gen, "Generator JSON for bregman/logbregman");
  compute->add_option("--f", cfg.f_path, "Density CSV for f")->required();
  compute->add_option("--g", cfg.g_path, "Density CSV for g")->required();
  compute->add_option("--grid", cfg.grid, "Resample both densities onto lo,hi,n");
  add_common(compute);

  auto *diagnose = app.add_subcommand("diagnose", "Theta scan of the uniform-density identity");
  add_gen_idx(diagnose);
  diagnose->add_option("--theta-range", cfg.theta_range, "lo,hi,n (log-spaced)");
  add_common(diagnose);

  auto *search = app.add_subcommand("search", "Seeded counterexample search");
  add_gen_idx(search);
  search->add_option("--seed", cfg.seed, "RNG seed");
  search->add_option("--out", cfg.out, "Witness JSON path")->required();

  auto *limit = app.add_subcommand("limit-check", "DPD and LDPD convergence to KL as alpha -> 0");
  limit->add_option("--f", cfg.f_path, "Density CSV for f")->required();
  limit->add_option("--g", cfg.g_path, "Density CSV for g")->required();
  add_common(limit);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kBadInput;
  }

  try
  {
    if (compute->parsed())
    {
      return cmd_compute(cfg);
    }
    if (diagnose->parsed())
    {
      return cmd_diagnose(cfg);
    }
    if (search->parsed())
    {
      return cmd_search(cfg);
    }
    return cmd_limit_check(cfg);
  }
  catch (divkit::DegenerateIntegral const &e)
  {
    std::cerr << "error: " << e.what() << " (term " << e.term() << ")\n";
    return kDegenerate;
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}
