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

// Image pairs of a fixed (x, y) under every word of a given length:
// P_1 = {(f_i(x), f_i(y))}, P_{m+1} = {(f_i(a), f_i(b)) : (a, b) in P_m},
// with coordinate-identical pairs merged at every level.

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "remetrica/maps.hpp"

namespace remetrica {

inline constexpr std::size_t kUnlimitedBudget = std::numeric_limits<std::size_t>::max();

struct LevelPairs {
  std::vector<std::pair<Point, Point>> pairs;
  bool exact = true;
};

struct LevelSup {
  double value = 0.0;
  bool exact = true;  // false: value is only a lower bound of the true supremum
};

// Walks the levels of one (x, y) query, reusing P_m to build P_{m+1}.
//
// Budget policy: before expanding P_m, if |P_m| * k would exceed the budget,
// only the max(1, budget / k) pairs with the largest current distance are kept
// (ties in enumeration order) and the walk is marked inexact from then on.
class LevelWalker {
 public:
  LevelWalker(const Ifs& ifs, const Point& x, const Point& y, std::size_t budget,
              const simd::KernelTable& kernels = simd::active_kernels());

  // Builds the next level and returns its supremum.
  LevelSup advance();

  std::size_t level() const { return level_; }
  bool exact() const { return exact_; }
  std::size_t pair_count() const { return a_.size(); }
  const PointBatch& first() const { return a_; }
  const PointBatch& second() const { return b_; }
  // Supremum of the current level (d(x, y) before the first advance).
  double current_sup() const;

 private:
  void truncate_to(std::size_t keep);

  const Ifs& ifs_;
  std::size_t budget_;
  const simd::KernelTable& kernels_;
  std::size_t level_ = 0;
  bool exact_ = true;
  PointBatch a_, b_;
  PointBatch next_a_, next_b_, img_a_, img_b_;
};

LevelPairs level_image_pairs(const Ifs& ifs, const Point& x, const Point& y, std::size_t depth,
                             std::size_t budget = kUnlimitedBudget);

LevelSup level_sup(const Ifs& ifs, const Point& x, const Point& y, std::size_t depth,
                   std::size_t budget = kUnlimitedBudget);

}  // namespace remetrica
