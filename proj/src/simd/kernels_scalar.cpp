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

#include <cmath>
#include <limits>

#include "distance_lane.hpp"

namespace remetrica::simd {
namespace {

using detail::lane_distance;

void pair_distances(BaseMetric metric, Columns a, Columns b, double* out) {
  for (std::size_t i = 0; i < a.size; ++i) out[i] = lane_distance(metric, a, i, b, i);
}

double max_pair_distance(BaseMetric metric, Columns a, Columns b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size; ++i) {
    const double d = lane_distance(metric, a, i, b, i);
    best = d > best ? d : best;
  }
  return best;
}

double min_distance(BaseMetric metric, const double* q, Columns set, double stop_below) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < set.size; ++j) {
    const double d = detail::lane_distance_to(metric, q, set, j);
    best = d < best ? d : best;
    if (best < stop_below) break;
  }
  return best;
}

void affine(const double* matrix, const double* offset, Columns in, MutableColumns out) {
  for (std::size_t r = 0; r < out.dim; ++r)
    for (std::size_t i = 0; i < in.size; ++i)
      out.cols[r][i] = detail::lane_affine(matrix, offset, in, r, i);
}

void sqrt_kernel(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(in[i]);
}

void clamp(double lo, double hi, const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::lane_clamp(lo, hi, in[i]);
}

constexpr KernelTable kScalar{
    Isa::scalar, &pair_distances, &max_pair_distance, &min_distance, &affine, &sqrt_kernel, &clamp,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace remetrica::simd
