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

// Box domains in R^k, the two base metrics, and the Hausdorff distance between
// finite point sets.

#include <cstddef>
#include <vector>

#include "remetrica/point_batch.hpp"
#include "remetrica/simd/kernels.hpp"

namespace remetrica {

// Per-coordinate slack for domain membership; images of exact boundary points
// can land a rounding error outside the box.
inline constexpr double kDomainTolerance = 1e-12;

class BoxDomain {
 public:
  BoxDomain(Point lower, Point upper);

  std::size_t dim() const { return lower_.dim(); }
  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }

  bool contains(const Point& p, double tol = kDomainTolerance) const;
  bool contains(std::span<const double> coords, double tol = kDomainTolerance) const;

  // Euclidean length of the box diagonal.
  double diameter() const;

  // All 2^dim corners, lower corner first.
  std::vector<Point> corners() const;

  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;

 private:
  Point lower_;
  Point upper_;
};

class MetricSpace {
 public:
  // diameter_bound is the box diagonal.
  static MetricSpace euclidean(BoxDomain domain);
  // d/(1+d) applied to the euclidean distance; diameter_bound is 1.
  static MetricSpace normalized_euclidean(BoxDomain domain);

  const BoxDomain& domain() const { return domain_; }
  BaseMetric base() const { return base_; }
  double diameter_bound() const { return diameter_bound_; }
  std::size_t dim() const { return domain_.dim(); }

  // Throws Error(dimension) when either point has the wrong dimension.
  double distance(const Point& x, const Point& y) const;
  double distance(std::span<const double> x, std::span<const double> y) const;

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  MetricSpace(BoxDomain domain, BaseMetric base, double diameter_bound);

  BoxDomain domain_;
  BaseMetric base_;
  double diameter_bound_;
};

const char* to_string(BaseMetric metric);

// Returns a space whose distances never exceed 1. A euclidean box of diameter
// at most 1 and any normalized space are returned unchanged.
MetricSpace normalize(const MetricSpace& space);

// Finite stand-in for a compact subset of the domain. Points are deduplicated
// under exact coordinate equality, keeping first-occurrence order.
class FinitePointSet {
 public:
  FinitePointSet(const BoxDomain& domain, const std::vector<Point>& points);
  // Takes a batch that may contain duplicates; membership is checked.
  FinitePointSet(const BoxDomain& domain, const PointBatch& points);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.dim(); }
  const PointBatch& batch() const { return points_; }
  Point point(std::size_t i) const { return points_.point(i); }
  std::vector<Point> points() const;

  bool contains(const Point& p) const;

 private:
  PointBatch points_;
};

// max of the two directed distances. Uses the active SIMD kernels with an
// early-exit scan; the result is exactly the double-loop value.
double hausdorff(const MetricSpace& space, const FinitePointSet& a, const FinitePointSet& b);
double hausdorff(const MetricSpace& space, const FinitePointSet& a, const FinitePointSet& b,
                 const simd::KernelTable& kernels);

// sup_{p in from} inf_{q in to} d(p, q)
double directed_hausdorff(const MetricSpace& space, const PointBatch& from, const PointBatch& to,
                          const simd::KernelTable& kernels);

}  // namespace remetrica
