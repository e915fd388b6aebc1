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

#include "remetrica/point_batch.hpp"

#include <cmath>

#include "remetrica/error.hpp"

namespace remetrica {
namespace {

void check_finite(const std::vector<double>& coords) {
  if (coords.empty()) throw Error(ErrorKind::dimension, "point must have at least one coordinate");
  for (double c : coords)
    if (!std::isfinite(c)) throw Error(ErrorKind::numeric, "point coordinate is not finite");
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { check_finite(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { check_finite(coords_); }

PointBatch::PointBatch(std::size_t dim) : cols_(dim) {
  if (dim == 0) throw Error(ErrorKind::dimension, "batch dimension must be positive");
}

void PointBatch::reserve(std::size_t n) {
  for (auto& c : cols_) c.reserve(n);
}

void PointBatch::resize(std::size_t n) {
  for (auto& c : cols_) c.resize(n);
  size_ = n;
}

void PointBatch::push_back(const Point& p) {
  if (p.dim() != dim()) throw Error(ErrorKind::dimension, "point dimension does not match batch");
  for (std::size_t c = 0; c < dim(); ++c) cols_[c].push_back(p[c]);
  ++size_;
}

void PointBatch::push_back_from(const PointBatch& other, std::size_t i) {
  for (std::size_t c = 0; c < dim(); ++c) cols_[c].push_back(other.cols_[c][i]);
  ++size_;
}

Point PointBatch::point(std::size_t i) const {
  std::vector<double> coords(dim());
  copy_point(i, coords.data());
  return Point(std::move(coords));
}

void PointBatch::copy_point(std::size_t i, double* out) const {
  for (std::size_t c = 0; c < dim(); ++c) out[c] = cols_[c][i];
}

PointBatch::ConstView::ConstView(const PointBatch& batch) : ptrs_(batch.dim()), size_(batch.size_) {
  for (std::size_t c = 0; c < ptrs_.size(); ++c) ptrs_[c] = batch.cols_[c].data();
}

PointBatch::MutableView::MutableView(PointBatch& batch) : ptrs_(batch.dim()), size_(batch.size_) {
  for (std::size_t c = 0; c < ptrs_.size(); ++c) ptrs_[c] = batch.cols_[c].data();
}

bool PointBatch::all_finite() const {
  for (const auto& col : cols_)
    for (double v : col)
      if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace remetrica
