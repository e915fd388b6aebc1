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

#include "remetrica/space.hpp"

#include <cmath>
#include <limits>

#include "dedup.hpp"
#include "remetrica/error.hpp"
#include "simd/distance_lane.hpp"

namespace remetrica {

BoxDomain::BoxDomain(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.dim() != upper_.dim()) throw Error(ErrorKind::dimension, "box corners differ in dimension");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!(lower_[i] < upper_[i]))
      throw Error(ErrorKind::domain, "box lower bound must be below upper bound in every coordinate");
}

bool BoxDomain::contains(const Point& p, double tol) const { return contains(p.coords(), tol); }

bool BoxDomain::contains(std::span<const double> coords, double tol) const {
  if (coords.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!(coords[i] >= lower_[i] - tol && coords[i] <= upper_[i] + tol)) return false;
  return true;
}

double BoxDomain::diameter() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    const double side = upper_[i] - lower_[i];
    acc += side * side;
  }
  return std::sqrt(acc);
}

std::vector<Point> BoxDomain::corners() const {
  std::vector<Point> out;
  const std::size_t count = std::size_t{1} << dim();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<double> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = (mask >> i) & 1U ? upper_[i] : lower_[i];
    out.emplace_back(std::move(c));
  }
  return out;
}

MetricSpace::MetricSpace(BoxDomain domain, BaseMetric base, double diameter_bound)
    : domain_(std::move(domain)), base_(base), diameter_bound_(diameter_bound) {}

MetricSpace MetricSpace::euclidean(BoxDomain domain) {
  const double diam = domain.diameter();
  return MetricSpace(std::move(domain), BaseMetric::euclidean, diam);
}

MetricSpace MetricSpace::normalized_euclidean(BoxDomain domain) {
  return MetricSpace(std::move(domain), BaseMetric::normalized_euclidean, 1.0);
}

double MetricSpace::distance(const Point& x, const Point& y) const { return distance(x.coords(), y.coords()); }

double MetricSpace::distance(std::span<const double> x, std::span<const double> y) const {
  if (x.size() != dim() || y.size() != dim())
    throw Error(ErrorKind::dimension, "point dimension does not match the space");
  // Route through the reference lane formula so scalar and batched distances agree bit for bit.
  std::vector<const double*> xs(dim()), ys(dim());
  for (std::size_t c = 0; c < dim(); ++c) {
    xs[c] = &x[c];
    ys[c] = &y[c];
  }
  return simd::detail::lane_distance(base_, {xs.data(), dim(), 1}, 0, {ys.data(), dim(), 1}, 0);
}

const char* to_string(BaseMetric metric) {
  return metric == BaseMetric::euclidean ? "euclidean" : "normalized-euclidean";
}

MetricSpace normalize(const MetricSpace& space) {
  if (space.base() == BaseMetric::normalized_euclidean) return space;
  if (space.domain().diameter() <= 1.0) return space;
  return MetricSpace::normalized_euclidean(space.domain());
}

FinitePointSet::FinitePointSet(const BoxDomain& domain, const std::vector<Point>& points)
    : points_(domain.dim()) {
  PointBatch raw(domain.dim());
  raw.reserve(points.size());
  for (const Point& p : points) raw.push_back(p);
  *this = FinitePointSet(domain, raw);
}

FinitePointSet::FinitePointSet(const BoxDomain& domain, const PointBatch& points) : points_(domain.dim()) {
  if (points.empty()) throw Error(ErrorKind::empty_set, "point set must be nonempty");
  if (points.dim() != domain.dim()) throw Error(ErrorKind::dimension, "point set dimension does not match domain");
  std::vector<double> buf(points.dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    points.copy_point(i, buf.data());
    if (!domain.contains(buf)) throw Error(ErrorKind::domain, "point set member lies outside the domain");
  }
  if (!points.all_finite()) throw Error(ErrorKind::numeric, "point set has a non-finite coordinate");
  const auto keep = detail::RowDeduplicator({&points}).unique_rows();
  points_.reserve(keep.size());
  for (std::size_t i : keep) points_.push_back_from(points, i);
}

std::vector<Point> FinitePointSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(points_.point(i));
  return out;
}

bool FinitePointSet::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    bool same = true;
    for (std::size_t c = 0; c < dim() && same; ++c) same = points_.at(c, i) == p[c];
    if (same) return true;
  }
  return false;
}

double directed_hausdorff(const MetricSpace& space, const PointBatch& from, const PointBatch& to,
                          const simd::KernelTable& kernels) {
  if (from.empty() || to.empty()) throw Error(ErrorKind::empty_set, "hausdorff distance of an empty set");
  if (from.dim() != space.dim() || to.dim() != space.dim())
    throw Error(ErrorKind::dimension, "point set dimension does not match the space");
  const auto target = to.view();
  std::vector<double> q(from.dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    from.copy_point(i, q.data());
    // A point whose nearest neighbour is closer than the current worst cannot raise it.
    const double nearest = kernels.min_distance(space.base(), q.data(), target, worst);
    if (nearest > worst) worst = nearest;
  }
  return worst;
}

double hausdorff(const MetricSpace& space, const FinitePointSet& a, const FinitePointSet& b,
                 const simd::KernelTable& kernels) {
  const double ab = directed_hausdorff(space, a.batch(), b.batch(), kernels);
  const double ba = directed_hausdorff(space, b.batch(), a.batch(), kernels);
  return ab > ba ? ab : ba;
}

double hausdorff(const MetricSpace& space, const FinitePointSet& a, const FinitePointSet& b) {
  return hausdorff(space, a, b, simd::active_kernels());
}

}  // namespace remetrica
