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

#include "remetrica/remetric.hpp"

#include <cmath>

#include "remetrica/error.hpp"
#include "remetrica/parallel.hpp"

namespace remetrica {

void RemetricParams::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorKind::params, "epsilon must be positive and finite");
  if (budget == 0) throw Error(ErrorKind::params, "pair budget must be at least 1");
}

double tail_bound(const MetricSpace& space, double epsilon, std::size_t depth) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorKind::params, "epsilon must be positive and finite");
  return space.diameter_bound() * std::pow(1.0 + epsilon, -static_cast<double>(depth)) / epsilon;
}

DepthSelection select_depth(const MetricSpace& space, std::size_t family_size, double epsilon, double tail_tol,
                            std::size_t budget, std::size_t max_depth) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorKind::params, "epsilon must be positive and finite");
  if (!(tail_tol > 0.0)) throw Error(ErrorKind::params, "tail tolerance must be positive");
  if (family_size == 0 || budget == 0) throw Error(ErrorKind::params, "family size and budget must be positive");

  const double raw = std::log(space.diameter_bound() / (epsilon * tail_tol)) / std::log1p(epsilon);
  std::size_t depth = raw > 0.0 ? static_cast<std::size_t>(std::ceil(raw)) : 0;
  while (depth < max_depth && tail_bound(space, epsilon, depth) > tail_tol) ++depth;

  // Work cap: projected pair count sum_{n<=N} min(k^n, budget) must stay within budget * N.
  auto projected = [&](std::size_t n_levels) {
    double total = 0.0, level = 1.0;
    for (std::size_t n = 1; n <= n_levels; ++n) {
      level = std::min(level * static_cast<double>(family_size), static_cast<double>(budget));
      total += level;
    }
    return total;
  };
  bool capped = false;
  while (depth > 0 && projected(depth) > static_cast<double>(budget) * static_cast<double>(depth)) {
    --depth;
    capped = true;
  }
  if (depth >= max_depth) {
    depth = max_depth;
    capped = tail_bound(space, epsilon, depth) > tail_tol;
  }
  return {depth, tail_bound(space, epsilon, depth), capped};
}

CertifiedDistance remetric_distance(const Ifs& ifs, const RemetricParams& params, const Point& x, const Point& y) {
  params.validate();
  LevelWalker walker(ifs, x, y, params.budget);
  double lower = walker.current_sup();
  for (std::size_t n = 1; n <= params.depth; ++n) {
    const LevelSup sup = walker.advance();
    // Images of coincident points coincide, so every deeper level is zero too.
    if (sup.value == 0.0) break;
    lower += sup.value * std::pow(1.0 + params.epsilon, -static_cast<double>(n));
  }
  return {lower, lower + tail_bound(ifs.space(), params.epsilon, params.depth), walker.exact()};
}

CertifiedDistance single_map_distance(const MapSpec& map, const MetricSpace& space, const RemetricParams& params,
                                      const Point& x, const Point& y) {
  params.validate();
  Point fx = x, fy = y;
  double lower = space.distance(fx, fy);
  for (std::size_t n = 1; n <= params.depth; ++n) {
    fx = map.eval(fx, space.domain());
    fy = map.eval(fy, space.domain());
    const double d = space.distance(fx, fy);
    if (d == 0.0) break;
    lower += d * std::pow(1.0 + params.epsilon, -static_cast<double>(n));
  }
  return {lower, lower + tail_bound(space, params.epsilon, params.depth), true};
}

bool LipschitzBoundReport::passed() const {
  for (const auto& m : maps)
    if (m.violations > 0) return false;
  return true;
}

LipschitzBoundReport verify_lipschitz_bound(const Ifs& ifs, const RemetricParams& params,
                                            const std::vector<std::pair<Point, Point>>& pairs) {
  params.validate();
  const std::size_t k = ifs.size();
  const double factor = 1.0 + params.epsilon;

  struct Slot {
    bool skipped = false;
    bool rhs_exact = true;
    double rhs = 0.0;
    std::vector<double> lhs;
  };
  std::vector<Slot> slots(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto& [x, y] = pairs[p];
    Slot& s = slots[p];
    if (ifs.space().distance(x, y) == 0.0) {
      s.skipped = true;
      return;
    }
    const CertifiedDistance rhs = remetric_distance(ifs, params, x, y);
    s.rhs = rhs.upper;
    s.rhs_exact = rhs.exact_levels;
    s.lhs.resize(k);
    for (std::size_t g = 0; g < k; ++g)
      s.lhs[g] = remetric_distance(ifs, params, ifs.eval_map(g, x), ifs.eval_map(g, y)).lower;
  });

  LipschitzBoundReport report;
  report.epsilon = params.epsilon;
  report.maps.resize(k);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Slot& s = slots[p];
    if (s.skipped) {
      ++report.skipped;
      continue;
    }
    for (std::size_t g = 0; g < k; ++g) {
      MapBoundReport& m = report.maps[g];
      ++m.checked;
      const double ratio = s.lhs[g] / s.rhs;
      if (!m.witness || ratio > m.max_ratio) {
        m.max_ratio = ratio;
        m.witness = pairs[p];
      }
      const bool violated = s.lhs[g] > factor * s.rhs;
      if (!s.rhs_exact) {
        ++m.uncertified;
        if (violated) ++m.uncertified_violations;
      } else if (violated) {
        ++m.violations;
      }
    }
  }
  return report;
}

}  // namespace remetrica
