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

#include "remetrica/analysis.hpp"

#include <cmath>
#include <random>

#include "remetrica/error.hpp"
#include "remetrica/parallel.hpp"

namespace remetrica {

DistanceOracle base_distance_oracle(const MetricSpace& space) {
  return [space](const Point& x, const Point& y) { return space.distance(x, y); };
}

DistanceOracle remetric_oracle(const Ifs& ifs, const RemetricParams& params) {
  params.validate();
  return [ifs, params](const Point& x, const Point& y) { return remetric_distance(ifs, params, x, y).lower; };
}

LipschitzEstimate lipschitz_estimate(const MapSpec& map, const BoxDomain& domain, const DistanceOracle& metric,
                                     const std::vector<PointPair>& pairs) {
  LipschitzEstimate est;
  for (const auto& [x, y] : pairs) {
    const double base = metric(x, y);
    if (base == 0.0) continue;
    const double ratio = metric(map.eval(x, domain), map.eval(y, domain)) / base;
    ++est.sample_count;
    if (!est.witness || ratio > est.value) {
      est.value = ratio;
      est.witness = PointPair{x, y};
    }
  }
  if (est.sample_count == 0) throw Error(ErrorKind::no_pairs, "no sampled pair has positive distance");
  return est;
}

LipschitzEstimate family_lipschitz_estimate(const Ifs& ifs, std::size_t depth, const DistanceOracle& metric,
                                            const std::vector<PointPair>& pairs, std::size_t budget) {
  if (depth == 0) throw Error(ErrorKind::params, "family depth must be at least 1");
  std::vector<double> ratios(pairs.size(), -1.0);
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto& [x, y] = pairs[p];
    const double base = metric(x, y);
    if (base == 0.0) return;
    LevelWalker walker(ifs, x, y, budget);
    for (std::size_t n = 0; n < depth; ++n) walker.advance();
    double best = 0.0;
    for (std::size_t i = 0; i < walker.pair_count(); ++i) {
      const double d = metric(walker.first().point(i), walker.second().point(i));
      best = d > best ? d : best;
    }
    ratios[p] = best / base;
  });

  LipschitzEstimate est;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (ratios[p] < 0.0) continue;
    ++est.sample_count;
    if (!est.witness || ratios[p] > est.value) {
      est.value = ratios[p];
      est.witness = pairs[p];
    }
  }
  if (est.sample_count == 0) throw Error(ErrorKind::no_pairs, "no sampled pair has positive distance");
  return est;
}

JsrEstimate jsr_estimate(const Ifs& ifs, const DistanceOracle& metric, const std::vector<PointPair>& pairs,
                         std::size_t n_max, std::size_t budget) {
  if (n_max == 0) throw Error(ErrorKind::params, "n_max must be at least 1");
  JsrEstimate out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double l = family_lipschitz_estimate(ifs, n, metric, pairs, budget).value;
    out.per_level.push_back({n, l, std::pow(l, 1.0 / static_cast<double>(n))});
  }
  out.final_root = out.per_level.back().root;
  return out;
}

PowerBoundReport verify_power_bound(const Ifs& ifs, const RemetricParams& params, std::size_t depth,
                                    const std::vector<PointPair>& pairs) {
  params.validate();
  if (depth == 0) throw Error(ErrorKind::params, "family depth must be at least 1");
  const double factor = std::pow(1.0 + params.epsilon, static_cast<double>(depth));

  struct Slot {
    std::size_t checked = 0, violations = 0, uncertified = 0;
    double max_ratio = 0.0;
  };
  std::vector<Slot> slots(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto& [x, y] = pairs[p];
    if (ifs.space().distance(x, y) == 0.0) return;
    const CertifiedDistance rhs = remetric_distance(ifs, params, x, y);
    LevelWalker walker(ifs, x, y, params.budget);
    for (std::size_t n = 0; n < depth; ++n) walker.advance();
    Slot& s = slots[p];
    for (std::size_t i = 0; i < walker.pair_count(); ++i) {
      const double lhs = remetric_distance(ifs, params, walker.first().point(i), walker.second().point(i)).lower;
      ++s.checked;
      s.max_ratio = std::max(s.max_ratio, lhs / (factor * rhs.upper));
      if (lhs > factor * rhs.upper) {
        if (rhs.exact_levels) ++s.violations;
      }
      if (!rhs.exact_levels) ++s.uncertified;
    }
  });

  PowerBoundReport report;
  report.depth = depth;
  for (const Slot& s : slots) {
    report.checked += s.checked;
    report.violations += s.violations;
    report.uncertified += s.uncertified;
    report.max_ratio = std::max(report.max_ratio, s.max_ratio);
  }
  return report;
}

namespace {

// Offsets as fractions of the radius along each axis, densest near the sphere
// and near the centre.
const std::vector<double>& axis_fractions() {
  static const std::vector<double> fractions = [] {
    std::vector<double> f{1.0 - 1e-9, 0.999, 0.99, 0.9, 0.75, 0.5, 0.25};
    for (int e = 1; e <= 12; ++e) f.push_back(std::pow(10.0, -e));
    return f;
  }();
  return fractions;
}

std::vector<Point> ball_samples(const BoxDomain& domain, const Point& x, double radius, const ModulusConfig& config,
                                std::mt19937_64& rng) {
  std::vector<Point> out;
  auto add = [&](std::vector<double> c) {
    if (domain.contains(c, 0.0)) out.emplace_back(std::move(c));
  };
  const std::size_t dim = x.dim();
  for (std::size_t axis = 0; axis < dim; ++axis) {
    for (double t : axis_fractions()) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> c(x.coords().begin(), x.coords().end());
        c[axis] += sign * t * radius;
        add(std::move(c));
      }
    }
  }
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit;
  for (std::size_t s = 0; s < config.random_samples; ++s) {
    std::vector<double> dir(dim);
    double norm = 0.0;
    for (double& v : dir) {
      v = gauss(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
    std::vector<double> c(x.coords().begin(), x.coords().end());
    for (std::size_t i = 0; i < dim; ++i) c[i] += r * dir[i] / norm;
    add(std::move(c));
  }
  return out;
}

}  // namespace

ModulusReport modulus_probe(const Ifs& ifs, std::size_t depth, const Point& x, double eps_out,
                            const std::vector<double>& radii, const ModulusConfig& config) {
  if (depth == 0) throw Error(ErrorKind::params, "family depth must be at least 1");
  if (!(eps_out > 0.0)) throw Error(ErrorKind::params, "eps_out must be positive");
  if (radii.empty()) throw Error(ErrorKind::params, "at least one radius is required");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw Error(ErrorKind::params, "radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw Error(ErrorKind::params, "radii must be strictly decreasing");
  }
  if (!ifs.domain().contains(x)) throw Error(ErrorKind::domain, "probe point lies outside the domain");

  std::mt19937_64 rng(config.seed);
  ModulusReport report;
  for (double radius : radii) {
    RadiusVerdict v{radius, true, 0, 0.0, std::nullopt};
    for (const Point& y : ball_samples(ifs.domain(), x, radius, config, rng)) {
      if (!(ifs.space().distance(x, y) < radius)) continue;
      ++v.samples;
      const double moved = level_sup(ifs, x, y, depth, config.budget).value;
      if (moved > v.worst) v.worst = moved;
      if (!(moved < eps_out) && v.accepted) {
        v.accepted = false;
        v.witness = PointPair{x, y};
      }
    }
    if (v.accepted && !report.delta) report.delta = radius;
    report.radii.push_back(std::move(v));
  }
  return report;
}

UniformModulusReport uniform_modulus_probe(const Ifs& ifs, std::size_t depth, double eps_out,
                                           const std::vector<double>& radii, std::size_t grid_points_per_axis,
                                           const ModulusConfig& config) {
  auto grid = validation_points(ifs.domain(), grid_points_per_axis);
  grid.resize(grid.size() - ifs.domain().corners().size());
  std::vector<ModulusReport> reports(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { reports[i] = modulus_probe(ifs, depth, grid[i], eps_out, radii, config); });

  UniformModulusReport out;
  out.points = grid.size();
  bool all_found = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!reports[i].delta) {
      if (all_found) out.weakest_point = grid[i];
      all_found = false;
      continue;
    }
    if (all_found && (!out.delta || *reports[i].delta < *out.delta)) {
      out.delta = reports[i].delta;
      out.weakest_point = grid[i];
    }
  }
  if (!all_found) out.delta.reset();
  return out;
}

}  // namespace remetrica
