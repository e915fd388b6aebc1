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
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "remetrica/point_batch.hpp"

namespace remetrica::detail {

// Indices of the first occurrence of every distinct row, where a row is point i
// of each batch in `batches` taken together. Equality is exact (0.0 == -0.0).
class RowDeduplicator {
 public:
  explicit RowDeduplicator(std::vector<const PointBatch*> batches) : batches_(std::move(batches)) {}

  std::vector<std::size_t> unique_rows() const {
    const std::size_t n = batches_.front()->size();
    std::vector<std::uint64_t> hashes(n);
    for (std::size_t i = 0; i < n; ++i) hashes[i] = row_hash(i);

    absl::flat_hash_set<std::size_t, Hash, Eq> seen(n, Hash{&hashes}, Eq{this});
    std::vector<std::size_t> keep;
    keep.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (seen.insert(i).second) keep.push_back(i);
    return keep;
  }

 private:
  struct Hash {
    const std::vector<std::uint64_t>* hashes;
    std::size_t operator()(std::size_t i) const { return (*hashes)[i]; }
  };
  struct Eq {
    const RowDeduplicator* self;
    bool operator()(std::size_t i, std::size_t j) const { return self->rows_equal(i, j); }
  };

  static std::uint64_t mix(std::uint64_t h, double v) {
    if (v == 0.0) v = 0.0;
    h ^= std::bit_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  std::uint64_t row_hash(std::size_t i) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (const PointBatch* b : batches_)
      for (std::size_t c = 0; c < b->dim(); ++c) h = mix(h, b->at(c, i));
    return h;
  }

  bool rows_equal(std::size_t i, std::size_t j) const {
    for (const PointBatch* b : batches_)
      for (std::size_t c = 0; c < b->dim(); ++c)
        if (b->at(c, i) != b->at(c, j)) return false;
    return true;
  }

  std::vector<const PointBatch*> batches_;
};

}  // namespace remetrica::detail
