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

// Built with -mavx2 only. FMA stays disabled so lanes round exactly like the
// scalar reference.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "distance_lane.hpp"

namespace remetrica::simd::detail {
namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline __m256d finish(BaseMetric metric, __m256d s) {
  if (metric == BaseMetric::normalized_euclidean)
    return _mm256_div_pd(s, _mm256_add_pd(_mm256_set1_pd(1.0), s));
  return s;
}

inline __m256d distance4(BaseMetric metric, Columns a, Columns b, std::size_t i) {
  if (a.dim == 1) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a.cols[0] + i), _mm256_loadu_pd(b.cols[0] + i));
    return finish(metric, abs_pd(diff));
  }
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t c = 0; c < a.dim; ++c) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a.cols[c] + i), _mm256_loadu_pd(b.cols[c] + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
  }
  return finish(metric, _mm256_sqrt_pd(acc));
}

inline __m256d distance4_to(BaseMetric metric, const double* q, Columns set, std::size_t j) {
  if (set.dim == 1) {
    const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(q[0]), _mm256_loadu_pd(set.cols[0] + j));
    return finish(metric, abs_pd(diff));
  }
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t c = 0; c < set.dim; ++c) {
    const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(q[c]), _mm256_loadu_pd(set.cols[c] + j));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
  }
  return finish(metric, _mm256_sqrt_pd(acc));
}

inline double hmax(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  double m = lanes[0];
  for (int l = 1; l < 4; ++l) m = lanes[l] > m ? lanes[l] : m;
  return m;
}

inline double hmin(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  double m = lanes[0];
  for (int l = 1; l < 4; ++l) m = lanes[l] < m ? lanes[l] : m;
  return m;
}

void pair_distances(BaseMetric metric, Columns a, Columns b, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= a.size; i += 4) _mm256_storeu_pd(out + i, distance4(metric, a, b, i));
  for (; i < a.size; ++i) out[i] = lane_distance(metric, a, i, b, i);
}

double max_pair_distance(BaseMetric metric, Columns a, Columns b) {
  __m256d best4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size; i += 4) best4 = _mm256_max_pd(distance4(metric, a, b, i), best4);
  double best = hmax(best4);
  for (; i < a.size; ++i) {
    const double d = lane_distance(metric, a, i, b, i);
    best = d > best ? d : best;
  }
  return best;
}

// Early exit is checked once per block of 16 points.
double min_distance(BaseMetric metric, const double* q, Columns set, double stop_below) {
  constexpr std::size_t kBlock = 16;
  __m256d best4 = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t j = 0;
  while (j + 4 <= set.size) {
    const std::size_t block_end = std::min(set.size - set.size % 4, j + kBlock);
    for (; j < block_end; j += 4) best4 = _mm256_min_pd(distance4_to(metric, q, set, j), best4);
    if (hmin(best4) < stop_below) return hmin(best4);
  }
  double best = hmin(best4);
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
    const __m256d off = _mm256_set1_pd(offset[r]);
    for (; i + 4 <= in.size; i += 4) {
      __m256d acc = off;
      for (std::size_t c = 0; c < in.dim; ++c)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(matrix[r * in.dim + c]),
                                               _mm256_loadu_pd(in.cols[c] + i)));
      _mm256_storeu_pd(out.cols[r] + i, acc);
    }
    for (; i < in.size; ++i) out.cols[r][i] = lane_affine(matrix, offset, in, r, i);
  }
}

void sqrt_kernel(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_sqrt_pd(_mm256_loadu_pd(in + i)));
  for (; i < n; ++i) out[i] = std::sqrt(in[i]);
}

void clamp(double lo, double hi, const double* in, double* out, std::size_t n) {
  const __m256d lo4 = _mm256_set1_pd(lo);
  const __m256d hi4 = _mm256_set1_pd(hi);
  std::size_t i = 0;
  // max_pd(x, lo) = x > lo ? x : lo and min_pd(y, hi) = y < hi ? y : hi, matching lane_clamp.
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_min_pd(_mm256_max_pd(_mm256_loadu_pd(in + i), lo4), hi4));
  for (; i < n; ++i) out[i] = lane_clamp(lo, hi, in[i]);
}

constexpr KernelTable kAvx2{
    Isa::avx2, &pair_distances, &max_pair_distance, &min_distance, &affine, &sqrt_kernel, &clamp,
};

}  // namespace

const KernelTable& avx2_kernels() { return kAvx2; }

}  // namespace remetrica::simd::detail
