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

#pragma once

// The remetrized distance
//
//   rho(x, y) = d(x, y) + sum_{n >= 1} sup{ d(f(x), f(y)) : f in F^n } / (1 + eps)^n
//
// under which every member of the family is (1 + eps)-Lipschitz. The series is
// truncated after `depth` levels; since every term is at most D (1 + eps)^-n,
// the discarded tail is at most D (1 + eps)^-N / eps, which brackets the true
// value in [lower, lower + tail].

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "remetrica/levels.hpp"
#include "remetrica/maps.hpp"

namespace remetrica {

struct RemetricParams {
  double epsilon = 1.0;
  std::size_t depth = 0;
  std::size_t budget = kUnlimitedBudget;  // max image pairs per level

  // Throws Error(params) unless epsilon > 0 (and finite) and budget >= 1.
  void validate() const;
};

inline constexpr std::size_t kDefaultMaxDepth = 4096;

struct DepthSelection {
  std::size_t depth;
  double tail;   // tail bound achieved at `depth`
  bool capped;   // max_depth bound before the requested tolerance was met
};

// Smallest N with D (1 + eps)^-N / eps <= tail_tol, starting from
// ceil(log(D / (eps tail_tol)) / log(1 + eps)) and capped at max_depth.
DepthSelection select_depth(const MetricSpace& space, std::size_t family_size, double epsilon, double tail_tol,
                            std::size_t budget = kUnlimitedBudget, std::size_t max_depth = kDefaultMaxDepth);

// D * sum_{n > N} (1 + eps)^-n = D (1 + eps)^-N / eps. Throws Error(params) for eps <= 0.
double tail_bound(const MetricSpace& space, double epsilon, std::size_t depth);

struct CertifiedDistance {
  double lower = 0.0;
  // lower + tail bound. Only a certificate when exact_levels is set; after a
  // budget truncation the in-level mass that was dropped is not covered.
  double upper = 0.0;
  bool exact_levels = true;
};

CertifiedDistance remetric_distance(const Ifs& ifs, const RemetricParams& params, const Point& x, const Point& y);

// One-map special case: sum of d(f^n(x), f^n(y)) / (1 + eps)^n along a single
// orbit pair; linear in depth.
CertifiedDistance single_map_distance(const MapSpec& map, const MetricSpace& space, const RemetricParams& params,
                                      const Point& x, const Point& y);

struct MapBoundReport {
  double max_ratio = 0.0;  // max over pairs of lower(g x, g y) / upper(x, y)
  std::optional<std::pair<Point, Point>> witness;
  std::size_t checked = 0;
  std::size_t violations = 0;             // certified pairs with lower > (1 + eps) upper
  std::size_t uncertified = 0;            // pairs whose right-hand side was budget truncated
  std::size_t uncertified_violations = 0;
};

struct LipschitzBoundReport {
  double epsilon = 0.0;
  std::vector<MapBoundReport> maps;
  std::size_t skipped = 0;  // pairs with d(x, y) = 0

  bool passed() const;
};

// For each map g and pair (x, y), checks
//   rho_lower(g x, g y) <= (1 + eps) * rho_upper(x, y),
// which the remetrization guarantees, so any certified violation is a bug.
LipschitzBoundReport verify_lipschitz_bound(const Ifs& ifs, const RemetricParams& params,
                                            const std::vector<std::pair<Point, Point>>& pairs);

}  // namespace remetrica
