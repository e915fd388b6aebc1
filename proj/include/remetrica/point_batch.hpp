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
#include <initializer_list>
#include <span>
#include <vector>

#include "remetrica/simd/kernels.hpp"

namespace remetrica {

// A point of R^k with finite coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Points stored column-wise so the SIMD kernels can stream each coordinate.
class PointBatch {
 public:
  explicit PointBatch(std::size_t dim = 1);

  std::size_t dim() const { return cols_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void reserve(std::size_t n);
  void resize(std::size_t n);
  void clear() { resize(0); }
  void push_back(const Point& p);
  void push_back_from(const PointBatch& other, std::size_t i);

  double at(std::size_t coord, std::size_t i) const { return cols_[coord][i]; }
  std::span<double> column(std::size_t coord) { return cols_[coord]; }
  std::span<const double> column(std::size_t coord) const { return cols_[coord]; }
  Point point(std::size_t i) const;
  void copy_point(std::size_t i, double* out) const;

  // Kernel views; valid until the batch is resized.
  class ConstView {
   public:
    explicit ConstView(const PointBatch& batch);
    operator simd::Columns() const { return {ptrs_.data(), ptrs_.size(), size_}; }

   private:
    std::vector<const double*> ptrs_;
    std::size_t size_;
  };
  class MutableView {
   public:
    explicit MutableView(PointBatch& batch);
    operator simd::MutableColumns() const { return {ptrs_.data(), ptrs_.size(), size_}; }

   private:
    std::vector<double*> ptrs_;
    std::size_t size_;
  };
  ConstView view() const { return ConstView(*this); }
  MutableView mutable_view() { return MutableView(*this); }

  // False if any coordinate is NaN or infinite.
  bool all_finite() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::vector<double>> cols_;
};

}  // namespace remetrica
