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

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "remetrica/maps.hpp"
#include "remetrica/space.hpp"

namespace remetrica::testing {

inline BoxDomain unit_interval() { return BoxDomain(Point{0.0}, Point{1.0}); }

inline MetricSpace unit_euclidean() { return MetricSpace::euclidean(unit_interval()); }

inline BoxDomain unit_box(std::size_t dim) {
  return BoxDomain(Point(std::vector<double>(dim, 0.0)), Point(std::vector<double>(dim, 1.0)));
}

inline Point random_point(const BoxDomain& box, std::mt19937_64& rng) {
  std::vector<double> c(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i)
    c[i] = std::uniform_real_distribution<double>(box.lower()[i], box.upper()[i])(rng);
  return Point(std::move(c));
}

inline std::vector<Point> random_points(const BoxDomain& box, std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(box, rng));
  return out;
}

inline bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

// Family used throughout: {sqrt(x), x/2} on [0, 1].
inline Ifs sqrt_half_ifs() { return Ifs(unit_euclidean(), {MapSpec::power(0.5), MapSpec::scale(0.5)}); }

}  // namespace remetrica::testing
