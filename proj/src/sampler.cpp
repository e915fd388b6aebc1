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

#include "remetrica/sampler.hpp"

#include <cmath>
#include <random>

#include "remetrica/maps.hpp"

namespace remetrica {

std::vector<double> default_ladder() {
  std::vector<double> out;
  for (int e = 1; e <= 12; ++e) out.push_back(std::pow(10.0, -e));
  return out;
}

namespace {

Point uniform_point(const BoxDomain& domain, std::mt19937_64& rng) {
  std::vector<double> c(domain.dim());
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    std::uniform_real_distribution<double> u(domain.lower()[i], domain.upper()[i]);
    c[i] = u(rng);
  }
  return Point(std::move(c));
}

void add_ladder(const BoxDomain& domain, const Point& base, const std::vector<double>& ladder,
                std::vector<PointPair>& out) {
  for (std::size_t axis = 0; axis < domain.dim(); ++axis) {
    for (double h : ladder) {
      std::vector<double> c(base.coords().begin(), base.coords().end());
      if (base[axis] + h <= domain.upper()[axis]) {
        c[axis] = base[axis] + h;
      } else if (base[axis] - h >= domain.lower()[axis]) {
        c[axis] = base[axis] - h;
      } else {
        continue;
      }
      Point other(std::move(c));
      if (!(other == base)) out.emplace_back(base, std::move(other));
    }
  }
}

}  // namespace

std::vector<PointPair> PairSampler::pairs(const BoxDomain& domain) const {
  std::mt19937_64 rng(seed);
  std::vector<PointPair> out;
  out.reserve(uniform_pairs);
  for (std::size_t i = 0; i < uniform_pairs; ++i) {
    Point x = uniform_point(domain, rng);
    Point y = uniform_point(domain, rng);
    if (!(x == y)) out.emplace_back(std::move(x), std::move(y));
  }

  if (grid_points_per_axis >= 2) {
    // Consecutive grid points along the first axis, in grid order.
    const auto grid = validation_points(domain, grid_points_per_axis);
    const std::size_t grid_size = grid.size() - domain.corners().size();
    for (std::size_t i = 0; i + 1 < grid_size; ++i)
      if ((i + 1) % grid_points_per_axis != 0) out.emplace_back(grid[i], grid[i + 1]);
  }

  if (!ladder.empty()) {
    for (const Point& corner : domain.corners()) add_ladder(domain, corner, ladder, out);
    for (std::size_t b = 0; b < ladder_bases; ++b) add_ladder(domain, uniform_point(domain, rng), ladder, out);
  }
  return out;
}

}  // namespace remetrica
