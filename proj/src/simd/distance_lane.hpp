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

#include <cmath>
#include <cstddef>

#include "remetrica/simd/kernels.hpp"

namespace remetrica::simd::detail {

// Per-lane reference formula. Vector variants must follow the same operation
// sequence: |diff| in 1-D, otherwise sqrt of the left-to-right sum of squares.
inline double lane_distance(BaseMetric metric, Columns a, std::size_t i, Columns b, std::size_t j) {
  double s;
  if (a.dim == 1) {
    s = std::fabs(a.cols[0][i] - b.cols[0][j]);
  } else {
    double acc = 0.0;
    for (std::size_t c = 0; c < a.dim; ++c) {
      const double diff = a.cols[c][i] - b.cols[c][j];
      acc = acc + diff * diff;
    }
    s = std::sqrt(acc);
  }
  return metric == BaseMetric::normalized_euclidean ? s / (1.0 + s) : s;
}

inline double lane_distance_to(BaseMetric metric, const double* q, Columns set, std::size_t j) {
  double s;
  if (set.dim == 1) {
    s = std::fabs(q[0] - set.cols[0][j]);
  } else {
    double acc = 0.0;
    for (std::size_t c = 0; c < set.dim; ++c) {
      const double diff = q[c] - set.cols[c][j];
      acc = acc + diff * diff;
    }
    s = std::sqrt(acc);
  }
  return metric == BaseMetric::normalized_euclidean ? s / (1.0 + s) : s;
}

inline double lane_affine(const double* matrix, const double* offset, Columns in, std::size_t row,
                          std::size_t i) {
  double acc = offset[row];
  for (std::size_t c = 0; c < in.dim; ++c) acc = acc + matrix[row * in.dim + c] * in.cols[c][i];
  return acc;
}

inline double lane_clamp(double lo, double hi, double x) {
  const double y = x > lo ? x : lo;
  return y < hi ? y : hi;
}

const KernelTable& avx2_kernels();
const KernelTable& neon_kernels();

}  // namespace remetrica::simd::detail
