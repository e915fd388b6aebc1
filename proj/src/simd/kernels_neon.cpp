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

// AArch64 variant; same per-lane operation order as the scalar reference.

#include <arm_neon.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "distance_lane.hpp"

namespace remetrica::simd::detail {
namespace {

inline float64x2_t finish(BaseMetric metric, float64x2_t s) {
  if (metric == BaseMetric::normalized_euclidean) return vdivq_f64(s, vaddq_f64(vdupq_n_f64(1.0), s));
  return s;
}

inline float64x2_t distance2(BaseMetric metric, Columns a, Columns b, std::size_t i) {
  if (a.dim == 1) return finish(metric, vabsq_f64(vsubq_f64(vld1q_f64(a.cols[0] + i), vld1q_f64(b.cols[0] + i))));
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t c = 0; c < a.dim; ++c) {
    const float64x2_t diff = vsubq_f64(vld1q_f64(a.cols[c] + i), vld1q_f64(b.cols[c] + i));
    acc = vaddq_f64(acc, vmulq_f64(diff, diff));
  }
  return finish(metric, vsqrtq_f64(acc));
}

inline float64x2_t distance2_to(BaseMetric metric, const double* q, Columns set, std::size_t j) {
  if (set.dim == 1) return finish(metric, vabsq_f64(vsubq_f64(vdupq_n_f64(q[0]), vld1q_f64(set.cols[0] + j))));
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t c = 0; c < set.dim; ++c) {
    const float64x2_t diff = vsubq_f64(vdupq_n_f64(q[c]), vld1q_f64(set.cols[c] + j));
    acc = vaddq_f64(acc, vmulq_f64(diff, diff));
  }
  return finish(metric, vsqrtq_f64(acc));
}

void pair_distances(BaseMetric metric, Columns a, Columns b, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= a.size; i += 2) vst1q_f64(out + i, distance2(metric, a, b, i));
  for (; i < a.size; ++i) out[i] = lane_distance(metric, a, i, b, i);
}

double max_pair_distance(BaseMetric metric, Columns a, Columns b) {
  float64x2_t best2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= a.size; i += 2) best2 = vmaxq_f64(distance2(metric, a, b, i), best2);
  double best = vmaxvq_f64(best2);
  for (; i < a.size; ++i) {
    const double d = lane_distance(metric, a, i, b, i);
    best = d > best ? d : best;
  }
  return best;
}

double min_distance(BaseMetric metric, const double* q, Columns set, double stop_below) {
  constexpr std::size_t kBlock = 16;
  float64x2_t best2 = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t j = 0;
  while (j + 2 <= set.size) {
    const std::size_t block_end = std::min(set.size - set.size % 2, j + kBlock);
    for (; j < block_end; j += 2) best2 = vminq_f64(distance2_to(metric, q, set, j), best2);
    if (vminvq_f64(best2) < stop_below) return vminvq_f64(best2);
  }
  double best = vminvq_f64(best2);
  for (; j < set.size; ++j) {
    const double d = lane_distance_to(metric, q, set, j);
    best = d < best ? d : best;
    if (best < stop_below) break;
  }
  return best;
}

void affine(const double* matrix, const double* offset, Columns in, MutableColumns out) {
  for (std::size_t r = 0; r < out.dim; ++r) {
    std::size_t i = 0;
    for (; i + 2 <= in.size; i += 2) {
      float64x2_t acc = vdupq_n_f64(offset[r]);
      for (std::size_t c = 0; c < in.dim; ++c)
        acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(matrix[r * in.dim + c]), vld1q_f64(in.cols[c] + i)));
      vst1q_f64(out.cols[r] + i, acc);
    }
    for (; i < in.size; ++i) out.cols[r][i] = lane_affine(matrix, offset, in, r, i);
  }
}

void sqrt_kernel(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsqrtq_f64(vld1q_f64(in + i)));
  for (; i < n; ++i) out[i] = std::sqrt(in[i]);
}

void clamp(double lo, double hi, const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = lane_clamp(lo, hi, in[i]);
}

constexpr KernelTable kNeon{
    Isa::neon, &pair_distances, &max_pair_distance, &min_distance, &affine, &sqrt_kernel, &clamp,
};

}  // namespace

const KernelTable& neon_kernels() { return kNeon; }

}  // namespace remetrica::simd::detail
