/*
 * Copyright 2026 The Remetrica Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "remetrica/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "remetrica/analysis.hpp"
#include "remetrica/cli/document.hpp"
#include "remetrica/cli/output.hpp"
#include "remetrica/error.hpp"
#include "remetrica/hutchinson.hpp"
#include "remetrica/remetric.hpp"

namespace remetrica::cli {
namespace {

json pair_json(const PointPair& p) { return {{"x", point_to_json(p.first)}, {"y", point_to_json(p.second)}}; }

json witness_json(const std::optional<PointPair>& w) { return w ? pair_json(*w) : json(nullptr); }

// Options shared by commands that need the remetric depth.
struct DepthOptions {
  double epsilon = 1.0;
  std::optional<double> tail_tol;
  std::optional<std::size_t> depth;
  std::size_t budget = kUnlimitedBudget;
  std::size_t max_depth = kDefaultMaxDepth;

  void add(CLI::App& cmd, bool epsilon_required) {
    auto* eps = cmd.add_option("--epsilon", epsilon, "remetrization slack eps > 0");
    if (epsilon_required) eps->required();
    auto* tol = cmd.add_option("--tail-tol", tail_tol, "choose the depth so the series tail is below this");
    auto* dep = cmd.add_option("--depth", depth, "number of series levels N");
    tol->excludes(dep);
    cmd.add_option("--budget", budget, "max image pairs per level");
    cmd.add_option("--max-depth", max_depth, "upper limit for the automatic depth");
  }

  // Default when neither flag is given: tail below 1e-6.
  std::pair<RemetricParams, DepthSelection> resolve(const Ifs& ifs) const {
    RemetricParams params{epsilon, 0, budget};
    params.validate();
    if (depth) {
      params.depth = *depth;
      return {params, {*depth, tail_bound(ifs.space(), epsilon, *depth), false}};
    }
    const DepthSelection sel = select_depth(ifs.space(), ifs.size(), epsilon, tail_tol.value_or(1e-6), budget, max_depth);
    params.depth = sel.depth;
    return {params, sel};
  }
};

json depth_json(const RemetricParams& params, const DepthSelection& sel) {
  return {{"epsilon", params.epsilon}, {"depth", sel.depth}, {"tail", sel.tail}, {"depth_capped", sel.capped}};
}

struct SamplerOptions {
  PairSampler sampler;
  std::vector<double> ladder = default_ladder();
  bool no_ladder = false;

  void add(CLI::App& cmd, std::size_t default_samples) {
    sampler.uniform_pairs = default_samples;
    cmd.add_option("--samples", sampler.uniform_pairs, "uniform random pairs");
    cmd.add_option("--seed", sampler.seed, "64-bit sampler seed");
    cmd.add_option("--grid", sampler.grid_points_per_axis, "grid points per axis for neighbour pairs (0 = off)");
    cmd.add_option("--ladder", ladder, "near-diagonal offsets h")->delimiter(',');
    cmd.add_flag("--no-ladder", no_ladder, "disable near-diagonal pairs");
    cmd.add_option("--ladder-bases", sampler.ladder_bases, "random base points for the ladder (corners always used)");
  }

  std::vector<PointPair> pairs(const BoxDomain& domain) const {
    PairSampler s = sampler;
    s.ladder = no_ladder ? std::vector<double>{} : ladder;
    return s.pairs(domain);
  }
};

std::vector<PointPair> read_pairs_file(const std::string& path) {
  const json doc = read_json_file(path);
  if (!doc.is_array()) throw Error(ErrorKind::parse, path + ": expected an array of [x, y] pairs");
  std::vector<PointPair> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = path + "[" + std::to_string(i) + "]";
    if (!doc[i].is_array() || doc[i].size() != 2) throw Error(ErrorKind::parse, where + ": expected [x, y]");
    out.emplace_back(point_from_json(doc[i][0], where + "[0]"), point_from_json(doc[i][1], where + "[1]"));
  }
  return out;
}

void check_in_domain(const Ifs& ifs, const Point& p, const std::string& what) {
  if (!ifs.domain().contains(p)) throw Error(ErrorKind::domain, what + " lies outside the domain");
}

int cmd_remetric(const std::string& doc, const DepthOptions& depth_opts, const std::optional<std::string>& pairs_file,
                 const std::vector<double>& x, const std::vector<double>& y, std::ostream& out) {
  const Ifs ifs = load_ifs_file(doc);
  std::vector<PointPair> pairs;
  if (pairs_file) {
    pairs = read_pairs_file(*pairs_file);
  } else {
    if (x.empty() || y.empty()) throw Error(ErrorKind::params, "give --pairs or both --x and --y");
    pairs.emplace_back(Point(x), Point(y));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check_in_domain(ifs, pairs[i].first, "pair " + std::to_string(i) + " x");
    check_in_domain(ifs, pairs[i].second, "pair " + std::to_string(i) + " y");
  }
  const auto [params, sel] = depth_opts.resolve(ifs);
  json result = depth_json(params, sel);
  result["records"] = json::array();
  for (const auto& [px, py] : pairs) {
    const CertifiedDistance d = remetric_distance(ifs, params, px, py);
    result["records"].push_back({{"x", point_to_json(px)},
                                 {"y", point_to_json(py)},
                                 {"lower", d.lower},
                                 {"upper", d.upper},
                                 {"exact", d.exact_levels}});
  }
  out << canonical_dump(result);
  return kExitOk;
}

int cmd_verify(const std::string& doc, const DepthOptions& depth_opts, const SamplerOptions& sampler,
               std::ostream& out) {
  const Ifs ifs = load_ifs_file(doc);
  const auto [params, sel] = depth_opts.resolve(ifs);
  const auto pairs = sampler.pairs(ifs.domain());
  const LipschitzBoundReport report = verify_lipschitz_bound(ifs, params, pairs);
  json result = depth_json(params, sel);
  result["pairs"] = pairs.size();
  result["skipped"] = report.skipped;
  result["maps"] = json::array();
  for (std::size_t g = 0; g < report.maps.size(); ++g) {
    const MapBoundReport& m = report.maps[g];
    result["maps"].push_back({{"index", g},
                              {"max_ratio", m.max_ratio},
                              {"witness", witness_json(m.witness)},
                              {"checked", m.checked},
                              {"violations", m.violations},
                              {"uncertified", m.uncertified},
                              {"uncertified_violations", m.uncertified_violations}});
  }
  result["pass"] = report.passed();
  out << canonical_dump(result);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

DistanceOracle metric_oracle(const Ifs& ifs, const std::string& metric, const DepthOptions& depth_opts,
                             json& meta) {
  meta["metric"] = metric;
  if (metric == "base") return base_distance_oracle(ifs.space());
  if (metric == "remetric") {
    const auto [params, sel] = depth_opts.resolve(ifs);
    meta["remetric"] = depth_json(params, sel);
    return remetric_oracle(ifs, params);
  }
  throw Error(ErrorKind::params, "--metric must be base or remetric");
}

json estimate_json(const LipschitzEstimate& est) {
  return {{"value", est.value}, {"witness", witness_json(est.witness)}, {"sample_count", est.sample_count},
          {"lower_bound", true}};
}

int cmd_lipschitz(const std::string& doc, std::optional<std::size_t> map_index,
                  std::optional<std::size_t> family_depth, const std::string& metric,
                  const DepthOptions& depth_opts, const SamplerOptions& sampler, std::ostream& out) {
  const Ifs ifs = load_ifs_file(doc);
  json meta;
  const DistanceOracle oracle = metric_oracle(ifs, metric, depth_opts, meta);
  const auto pairs = sampler.pairs(ifs.domain());
  json result;
  if (family_depth) {
    result = estimate_json(family_lipschitz_estimate(ifs, *family_depth, oracle, pairs, depth_opts.budget));
    result["family_depth"] = *family_depth;
  } else {
    const std::size_t idx = map_index.value_or(0);
    if (idx >= ifs.size()) throw Error(ErrorKind::params, "--map-index out of range");
    result = estimate_json(lipschitz_estimate(ifs.map(idx), ifs.domain(), oracle, pairs));
    result["map_index"] = idx;
  }
  result.update(meta);
  out << canonical_dump(result);
  return kExitOk;
}

int cmd_jsr(const std::string& doc, std::size_t n_max, const std::string& metric, const DepthOptions& depth_opts,
            const SamplerOptions& sampler, std::ostream& out) {
  const Ifs ifs = load_ifs_file(doc);
  json meta;
  const DistanceOracle oracle = metric_oracle(ifs, metric, depth_opts, meta);
  const JsrEstimate est = jsr_estimate(ifs, oracle, sampler.pairs(ifs.domain()), n_max, depth_opts.budget);
  json result;
  result["per_level"] = json::array();
  for (const JsrLevel& l : est.per_level)
    result["per_level"].push_back({{"n", l.depth}, {"lipschitz", l.lipschitz}, {"root", l.root}});
  result["final"] = est.final_root;
  result["heuristic"] = true;
  result.update(meta);
  out << canonical_dump(result);
  return kExitOk;
}

struct AttractorOptions {
  std::size_t steps = 10;
  double snap = kDefaultSnap;
  std::optional<std::string> seed_set;
  std::vector<std::string> outputs;
  std::optional<std::string> log_csv;
  std::size_t cap = kDefaultSetCap;
  std::optional<double> remetric_epsilon;
  std::size_t remetric_depth = 10;
};

int cmd_attractor(const std::string& doc, const AttractorOptions& opts, std::ostream& out) {
  const Ifs ifs = load_ifs_file(doc);
  std::vector<Point> seed_points;
  if (opts.seed_set) {
    std::ifstream in(*opts.seed_set);
    if (!in) throw Error(ErrorKind::parse, "cannot open " + *opts.seed_set);
    seed_points = read_points_csv(in, *opts.seed_set);
  } else {
    seed_points = ifs.domain().corners();
  }
  for (std::size_t i = 0; i < seed_points.size(); ++i)
    check_in_domain(ifs, seed_points[i], "seed point " + std::to_string(i));
  for (const std::string& path : opts.outputs)
    if (!path.ends_with(".csv") && !path.ends_with(".svg"))
      throw Error(ErrorKind::params, "--out must end in .csv or .svg: " + path);

  std::vector<NamedMetric> extra;
  if (opts.remetric_epsilon) {
    RemetricParams params{*opts.remetric_epsilon, opts.remetric_depth, kUnlimitedBudget};
    extra.push_back({"remetric", remetric_oracle(ifs, params)});
  }
  const AttractorResult res =
      attractor_iterate(ifs, FinitePointSet(ifs.domain(), seed_points), opts.steps, opts.snap, extra, opts.cap);

  for (const std::string& path : opts.outputs) {
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::params, "cannot write " + path);
    if (path.ends_with(".csv"))
      write_points_csv(file, res.final_set);
    else
      write_points_svg(file, res.final_set, ifs.domain());
  }
  if (opts.log_csv) {
    std::ofstream file(*opts.log_csv);
    if (!file) throw Error(ErrorKind::params, "cannot write " + *opts.log_csv);
    write_log_csv(file, res.log);
  }

  json result;
  result["snap"] = res.log.snap;
  result["capped"] = res.log.capped;
  result["final_size"] = res.final_set.size();
  result["steps"] = json::array();
  for (const IterationStep& s : res.log.steps) {
    json entry = {{"step", s.step}, {"size", s.size}, {"hausdorff_base", s.hausdorff_base}};
    for (std::size_t m = 0; m < s.hausdorff_extra.size(); ++m)
      entry["hausdorff_" + res.log.extra_metrics[m]] = s.hausdorff_extra[m];
    result["steps"].push_back(entry);
  }
  out << canonical_dump(result);
  return kExitOk;
}

struct ModulusOptions {
  std::vector<double> point;
  double eps_out = 0.1;
  std::vector<double> radii;
  std::size_t family_depth = 1;
  ModulusConfig config;
  std::size_t uniform_grid = 0;
};

json verdicts_json(const ModulusReport& report) {
  json out = json::array();
  for (const RadiusVerdict& v : report.radii)
    out.push_back({{"radius", v.radius},
                   {"accepted", v.accepted},
                   {"samples", v.samples},
                   {"worst", v.worst},
                   {"witness", witness_json(v.witness)}});
  return out;
}

int cmd_modulus(const std::string& doc, const ModulusOptions& opts, std::ostream& out) {
  const Ifs ifs = load_ifs_file(doc);
  json result;
  result["eps_out"] = opts.eps_out;
  result["family_depth"] = opts.family_depth;
  if (opts.uniform_grid > 0) {
    const UniformModulusReport rep =
        uniform_modulus_probe(ifs, opts.family_depth, opts.eps_out, opts.radii, opts.uniform_grid, opts.config);
    result["grid"] = opts.uniform_grid;
    result["points"] = rep.points;
    result["delta"] = rep.delta ? json(*rep.delta) : json(nullptr);
    result["weakest_point"] = rep.weakest_point ? point_to_json(*rep.weakest_point) : json(nullptr);
  } else {
    if (opts.point.empty()) throw Error(ErrorKind::params, "give --point or --uniform-grid");
    const Point x(opts.point);
    check_in_domain(ifs, x, "--point");
    const ModulusReport rep = modulus_probe(ifs, opts.family_depth, x, opts.eps_out, opts.radii, opts.config);
    result["point"] = point_to_json(x);
    result["delta"] = rep.delta ? json(*rep.delta) : json(nullptr);
    result["radii"] = verdicts_json(rep);
  }
  out << canonical_dump(result);
  return kExitOk;
}

int cmd_validate(const std::string& doc, std::size_t grid, const std::optional<std::string>& emit,
                 std::ostream& out, std::ostream& err) {
  const IfsDocument parsed = parse_document(read_json_file(doc));
  json result;
  result["grid"] = grid;
  result["maps"] = parsed.maps.size();
  if (auto v = validate_ifs(parsed.space, parsed.maps, grid)) {
    result["valid"] = false;
    result["violation"] = {{"map_index", v->map_index},
                           {"input", point_to_json(v->input)},
                           {"image", point_to_json(v->image)}};
    out << canonical_dump(result);
    err << "remetrica: map " << v->map_index << " leaves the domain\n";
    return kExitInputError;
  }
  result["valid"] = true;
  result["sampled"] = true;
  if (emit) {
    std::ofstream file(*emit);
    if (!file) throw Error(ErrorKind::params, "cannot write " + *emit);
    file << canonical_dump(document_to_json(parsed.space, parsed.maps));
  }
  out << canonical_dump(result);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Remetrization of iterated function systems"};
  app.require_subcommand(1);

  std::string doc;
  auto add_doc = [&](CLI::App* cmd) {
    cmd->add_option("document", doc, "IFS JSON document")->required();
  };

  auto* remetric = app.add_subcommand("remetric", "certified remetrized distance for point pairs");
  add_doc(remetric);
  DepthOptions remetric_depth;
  remetric_depth.add(*remetric, true);
  std::optional<std::string> pairs_file;
  std::vector<double> x, y;
  auto* pairs_opt = remetric->add_option("--pairs", pairs_file, "JSON file of [x, y] pairs");
  remetric->add_option("--x", x, "first point, comma separated")->delimiter(',')->excludes(pairs_opt);
  remetric->add_option("--y", y, "second point, comma separated")->delimiter(',')->excludes(pairs_opt);

  auto* verify = app.add_subcommand("verify", "check the (1+eps)-Lipschitz bound of every map");
  add_doc(verify);
  DepthOptions verify_depth;
  verify_depth.add(*verify, true);
  SamplerOptions verify_sampler;
  verify_sampler.add(*verify, 200);

  auto* lipschitz = app.add_subcommand("lipschitz", "sampled Lipschitz constant of a map or of F^n");
  add_doc(lipschitz);
  std::optional<std::size_t> map_index, family_depth;
  auto* idx_opt = lipschitz->add_option("--map-index", map_index, "map to estimate");
  lipschitz->add_option("--family-depth", family_depth, "estimate L(F^n) instead")->excludes(idx_opt);
  std::string lipschitz_metric = "base";
  lipschitz->add_option("--metric", lipschitz_metric, "base or remetric")->check(CLI::IsMember({"base", "remetric"}));
  DepthOptions lipschitz_depth;
  lipschitz_depth.add(*lipschitz, false);
  SamplerOptions lipschitz_sampler;
  lipschitz_sampler.add(*lipschitz, 1000);

  auto* jsr = app.add_subcommand("jsr", "generalized joint spectral radius estimate");
  add_doc(jsr);
  std::size_t n_max = 6;
  jsr->add_option("--nmax", n_max, "largest composition length");
  std::string jsr_metric = "base";
  jsr->add_option("--metric", jsr_metric, "base or remetric")->check(CLI::IsMember({"base", "remetric"}));
  DepthOptions jsr_depth;
  jsr_depth.add(*jsr, false);
  SamplerOptions jsr_sampler;
  jsr_sampler.add(*jsr, 200);

  auto* attractor = app.add_subcommand("attractor", "iterate the Hutchinson operator");
  add_doc(attractor);
  AttractorOptions attractor_opts;
  attractor->add_option("--steps", attractor_opts.steps, "number of operator applications");
  attractor->add_option("--snap", attractor_opts.snap, "grid resolution for deduplication (0 = exact)");
  attractor->add_option("--seed-set", attractor_opts.seed_set, "CSV of initial points (default: box corners)");
  attractor->add_option("--out", attractor_opts.outputs, "final set as .csv or .svg (repeatable)");
  attractor->add_option("--log-csv", attractor_opts.log_csv, "iteration log as CSV");
  attractor->add_option("--cap", attractor_opts.cap, "stop before sets exceed this size");
  attractor->add_option("--remetric-epsilon", attractor_opts.remetric_epsilon, "also log d_H under the remetric");
  attractor->add_option("--remetric-depth", attractor_opts.remetric_depth, "depth for the logged remetric");

  auto* modulus = app.add_subcommand("modulus", "equicontinuity modulus probe");
  add_doc(modulus);
  ModulusOptions modulus_opts;
  modulus->add_option("--point", modulus_opts.point, "probe point, comma separated")->delimiter(',');
  modulus->add_option("--eps-out", modulus_opts.eps_out, "output tolerance")->required();
  modulus->add_option("--radii", modulus_opts.radii, "decreasing candidate radii")->delimiter(',')->required();
  modulus->add_option("--family-depth", modulus_opts.family_depth, "probe F^n");
  modulus->add_option("--samples", modulus_opts.config.random_samples, "random samples per radius");
  modulus->add_option("--seed", modulus_opts.config.seed, "64-bit sampler seed");
  modulus->add_option("--uniform-grid", modulus_opts.uniform_grid, "probe every grid point and report the min");

  auto* validate = app.add_subcommand("validate", "sampled self-map check");
  add_doc(validate);
  std::size_t grid = Ifs::kDefaultValidationGrid;
  std::optional<std::string> emit;
  validate->add_option("--grid", grid, "grid points per axis")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  validate->add_option("--emit", emit, "write the canonical document here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "remetrica: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (remetric->parsed()) return cmd_remetric(doc, remetric_depth, pairs_file, x, y, out);
    if (verify->parsed()) return cmd_verify(doc, verify_depth, verify_sampler, out);
    if (lipschitz->parsed())
      return cmd_lipschitz(doc, map_index, family_depth, lipschitz_metric, lipschitz_depth, lipschitz_sampler, out);
    if (jsr->parsed()) return cmd_jsr(doc, n_max, jsr_metric, jsr_depth, jsr_sampler, out);
    if (attractor->parsed()) return cmd_attractor(doc, attractor_opts, out);
    if (modulus->parsed()) return cmd_modulus(doc, modulus_opts, out);
    if (validate->parsed()) return cmd_validate(doc, grid, emit, out, err);
  } catch (const Error& e) {
    err << "remetrica: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace remetrica::cli
