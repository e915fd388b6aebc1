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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "remetrica/space.hpp"

namespace remetrica {

using PointPair = std::pair<Point, Point>;

// Geometric ladder 10^-1, 10^-2, ..., 10^-12.
std::vector<double> default_ladder();

// Deterministic pair generator mixing three sources:
//  - uniform random pairs in the box,
//  - pairs of neighbouring points on a regular grid,
//  - near-diagonal pairs (x, x + h e_i) for every h on the ladder, based at the
//    box corners and at `ladder_bases` random points (x - h e_i when x + h e_i
//    leaves the box).
// Near-diagonal pairs are what expose non-Lipschitz behaviour such as sqrt at 0.
struct PairSampler {
  std::uint64_t seed = 0;
  std::size_t uniform_pairs = 100;
  std::size_t grid_points_per_axis = 0;  // 0 disables grid pairs
  std::vector<double> ladder = default_ladder();
  std::size_t ladder_bases = 0;

  std::vector<PointPair> pairs(const BoxDomain& domain) const;
};

}  // namespace remetrica
