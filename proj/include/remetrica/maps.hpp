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

// Map expression trees and iterated function systems built from them.
//
// Words are read right to left: Word{w0, w1, ..., w(n-1)} denotes
// f_{w0} o f_{w1} o ... o f_{w(n-1)}, so f_{w(n-1)} is applied first. Every
// level supremum is taken over all words of a length, so nothing downstream
// depends on this choice.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "remetrica/point_batch.hpp"
#include "remetrica/simd/kernels.hpp"
#include "remetrica/space.hpp"

namespace remetrica {

class MapSpec {
 public:
  struct Affine {
    std::size_t dim;
    std::vector<double> matrix;  // row-major dim x dim
    std::vector<double> offset;
  };
  struct Power {
    double exponent;
  };
  struct Clamp {};
  struct Compose {
    std::shared_ptr<const MapSpec> outer;
    std::shared_ptr<const MapSpec> inner;
  };
  using Node = std::variant<Affine, Power, Clamp, Compose>;

  // x -> matrix * x + offset; matrix given as rows.
  static MapSpec affine(const std::vector<std::vector<double>>& rows, std::vector<double> offset);
  static MapSpec scale(double factor, double offset = 0.0);  // 1-D shorthand
  static MapSpec identity(std::size_t dim);
  static MapSpec constant(std::vector<double> value);
  // Coordinatewise x^p, p > 0; coordinates must be nonnegative.
  static MapSpec power(double exponent);
  // Projection onto the domain box.
  static MapSpec clamp();
  // outer(inner(x))
  static MapSpec compose(MapSpec outer, MapSpec inner);

  const Node& node() const { return node_; }

  // Dimension fixed by affine nodes, or nullopt if the tree works in any dimension.
  std::optional<std::size_t> fixed_dim() const;
  bool uses_power() const;

  // Throws Error(negative_base) for a power node on a negative coordinate and
  // Error(numeric) for a non-finite result.
  Point eval(const Point& x, const BoxDomain& domain) const;

  // Batched evaluation; out is resized to in.size().
  void eval_batch(const PointBatch& in, PointBatch& out, const BoxDomain& domain,
                  const simd::KernelTable& kernels) const;

  std::string describe() const;

 private:
  explicit MapSpec(Node node) : node_(std::move(node)) {}

  void eval_node(PointBatch& data, PointBatch& scratch, const BoxDomain& domain,
                 const simd::KernelTable& kernels) const;

  Node node_;
};

struct Word {
  std::vector<std::size_t> indices;
  std::size_t length() const { return indices.size(); }
};

struct SelfMapViolation {
  std::size_t map_index;
  Point input;
  Point image;
};

// Evaluates every map on a regular grid (grid_points_per_axis per axis) plus
// all box corners and returns the first image outside the domain. This is a
// sampled check, not a proof.
std::optional<SelfMapViolation> validate_ifs(const MetricSpace& space, const std::vector<MapSpec>& maps,
                                             std::size_t grid_points_per_axis);

// Regular grid including both ends of each axis, then the corners.
std::vector<Point> validation_points(const BoxDomain& domain, std::size_t grid_points_per_axis);

class Ifs {
 public:
  static constexpr std::size_t kDefaultValidationGrid = 11;

  // Throws Error(self_map) naming the first violation, Error(dimension) for
  // maps of the wrong dimension, Error(params) for an empty family. Evaluation
  // errors hit while sampling (e.g. negative-base) propagate.
  Ifs(MetricSpace space, std::vector<MapSpec> maps, std::size_t grid_points_per_axis = kDefaultValidationGrid);

  const MetricSpace& space() const { return space_; }
  const BoxDomain& domain() const { return space_.domain(); }
  const std::vector<MapSpec>& maps() const { return maps_; }
  const MapSpec& map(std::size_t i) const { return maps_.at(i); }
  std::size_t size() const { return maps_.size(); }
  std::size_t validation_grid() const { return validation_grid_; }

  Point eval_map(std::size_t i, const Point& x) const;
  Point eval_word(const Word& w, const Point& x) const;

  // Every word of the given length in lexicographic index order (k^n words).
  std::vector<Word> words(std::size_t length) const;

  // Same family on a different space (e.g. after normalize). Not revalidated:
  // the domain must be unchanged.
  Ifs with_space(MetricSpace space) const;

 private:
  MetricSpace space_;
  std::vector<MapSpec> maps_;
  std::size_t validation_grid_;
};

}  // namespace remetrica
