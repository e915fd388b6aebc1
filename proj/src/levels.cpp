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

#include "remetrica/levels.hpp"

#include <algorithm>
#include <numeric>

#include "dedup.hpp"
#include "remetrica/error.hpp"

namespace remetrica {

LevelWalker::LevelWalker(const Ifs& ifs, const Point& x, const Point& y, std::size_t budget,
                         const simd::KernelTable& kernels)
    : ifs_(ifs),
      budget_(budget),
      kernels_(kernels),
      a_(ifs.space().dim()),
      b_(ifs.space().dim()),
      next_a_(ifs.space().dim()),
      next_b_(ifs.space().dim()),
      img_a_(ifs.space().dim()),
      img_b_(ifs.space().dim()) {
  if (budget == 0) throw Error(ErrorKind::params, "pair budget must be at least 1");
  if (x.dim() != ifs.space().dim() || y.dim() != ifs.space().dim())
    throw Error(ErrorKind::dimension, "query point dimension differs from the IFS domain");
  a_.push_back(x);
  b_.push_back(y);
}

double LevelWalker::current_sup() const {
  return kernels_.max_pair_distance(ifs_.space().base(), a_.view(), b_.view());
}

void LevelWalker::truncate_to(std::size_t keep) {
  std::vector<double> dist(a_.size());
  kernels_.pair_distances(ifs_.space().base(), a_.view(), b_.view(), dist.data());
  std::vector<std::size_t> order(a_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return dist[i] > dist[j]; });
  order.resize(keep);
  PointBatch ka(a_.dim()), kb(b_.dim());
  ka.reserve(keep);
  kb.reserve(keep);
  for (std::size_t i : order) {
    ka.push_back_from(a_, i);
    kb.push_back_from(b_, i);
  }
  a_ = std::move(ka);
  b_ = std::move(kb);
}

LevelSup LevelWalker::advance() {
  const std::size_t k = ifs_.size();
  const std::size_t n = a_.size();
  if (n > budget_ / k) {
    const std::size_t keep = std::max<std::size_t>(1, budget_ / k);
    if (keep < n) {
      truncate_to(keep);
      exact_ = false;
    }
  }

  const std::size_t m = a_.size();
  next_a_.resize(0);
  next_b_.resize(0);
  next_a_.reserve(m * k);
  next_b_.reserve(m * k);
  for (std::size_t i = 0; i < k; ++i) {
    ifs_.map(i).eval_batch(a_, img_a_, ifs_.domain(), kernels_);
    ifs_.map(i).eval_batch(b_, img_b_, ifs_.domain(), kernels_);
    const std::size_t base = next_a_.size();
    next_a_.resize(base + m);
    next_b_.resize(base + m);
    for (std::size_t c = 0; c < a_.dim(); ++c) {
      std::copy_n(img_a_.column(c).begin(), m, next_a_.column(c).begin() + base);
      std::copy_n(img_b_.column(c).begin(), m, next_b_.column(c).begin() + base);
    }
  }

  const auto keep = detail::RowDeduplicator({&next_a_, &next_b_}).unique_rows();
  if (keep.size() == next_a_.size()) {
    std::swap(a_, next_a_);
    std::swap(b_, next_b_);
  } else {
    a_.resize(0);
    b_.resize(0);
    a_.reserve(keep.size());
    b_.reserve(keep.size());
    for (std::size_t i : keep) {
      a_.push_back_from(next_a_, i);
      b_.push_back_from(next_b_, i);
    }
  }
  ++level_;
  return LevelSup{current_sup(), exact_};
}

LevelPairs level_image_pairs(const Ifs& ifs, const Point& x, const Point& y, std::size_t depth,
                             std::size_t budget) {
  if (depth == 0) throw Error(ErrorKind::params, "level depth must be at least 1");
  LevelWalker walker(ifs, x, y, budget);
  for (std::size_t n = 0; n < depth; ++n) walker.advance();
  LevelPairs out;
  out.exact = walker.exact();
  out.pairs.reserve(walker.pair_count());
  for (std::size_t i = 0; i < walker.pair_count(); ++i)
    out.pairs.emplace_back(walker.first().point(i), walker.second().point(i));
  return out;
}

LevelSup level_sup(const Ifs& ifs, const Point& x, const Point& y, std::size_t depth, std::size_t budget) {
  if (depth == 0) throw Error(ErrorKind::params, "level depth must be at least 1");
  LevelWalker walker(ifs, x, y, budget);
  LevelSup sup;
  for (std::size_t n = 0; n < depth; ++n) sup = walker.advance();
  return sup;
}

}  // namespace remetrica
