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

// The Hutchinson operator F[A] = union_i f_i[A] on finite point sets and
// deterministic attractor iteration with Hausdorff convergence logging.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "remetrica/analysis.hpp"
#include "remetrica/maps.hpp"
#include "remetrica/space.hpp"

namespace remetrica {

inline constexpr double kDefaultSnap = 1e-6;
inline constexpr std::size_t kDefaultSetCap = 1'000'000;

// Images of every point under every map. With snap > 0 coordinates are rounded
// to the nearest multiple of snap (then clamped into the box) before the exact
// deduplication; snap = 0 deduplicates exact coordinates only.
FinitePointSet hutchinson_apply(const Ifs& ifs, const FinitePointSet& a, double snap = 0.0);

// Hausdorff distance under an arbitrary distance (double loop).
double hausdorff_with(const DistanceOracle& metric, const FinitePointSet& a, const FinitePointSet& b);

struct NamedMetric {
  std::string name;
  DistanceOracle metric;
};

struct IterationStep {
  std::size_t step;        // t, the log entry compares A_t and A_{t+1}
  std::size_t size;        // |A_{t+1}|
  double hausdorff_base;   // d_H(A_t, A_{t+1}) under the base metric
  std::vector<double> hausdorff_extra;  // same, under each extra metric
};

struct IterationLog {
  double snap = 0.0;
  std::vector<std::string> extra_metrics;
  std::vector<IterationStep> steps;
  bool capped = false;  // stopped early because the next set would exceed the cap
};

struct AttractorResult {
  FinitePointSet final_set;
  IterationLog log;
};

AttractorResult attractor_iterate(const Ifs& ifs, const FinitePointSet& initial, std::size_t steps, double snap,
                                  const std::vector<NamedMetric>& extra_metrics = {},
                                  std::size_t set_cap = kDefaultSetCap);

}  // namespace remetrica
