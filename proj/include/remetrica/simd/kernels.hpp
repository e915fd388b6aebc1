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

// Data-parallel inner loops behind the geometry code. Each instruction set
// provides one KernelTable; the scalar table is the reference and every other
// table must reproduce it bit for bit (no FMA, same per-lane operation order).

#include <cstddef>
#include <span>
#include <vector>

namespace remetrica {

enum class BaseMetric { euclidean, normalized_euclidean };

namespace simd {

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa);

// Structure-of-arrays view: cols[c][i] is coordinate c of point i.
struct Columns {
  const double* const* cols;
  std::size_t dim;
  std::size_t size;
};

struct MutableColumns {
  double* const* cols;
  std::size_t dim;
  std::size_t size;
};

struct KernelTable {
  Isa isa;

  // out[i] = d(a_i, b_i)
  void (*pair_distances)(BaseMetric metric, Columns a, Columns b, double* out);

  // max_i d(a_i, b_i), or 0 when empty.
  double (*max_pair_distance)(BaseMetric metric, Columns a, Columns b);

  // min_j d(q, set_j), +inf when empty. Scanning may stop as soon as the running
  // minimum drops below stop_below; the returned value is then < stop_below but
  // not necessarily the true minimum.
  double (*min_distance)(BaseMetric metric, const double* q, Columns set, double stop_below);

  // out = M * in + offset with M row-major dim x dim; in and out must not alias.
  void (*affine)(const double* matrix, const double* offset, Columns in, MutableColumns out);

  void (*sqrt)(const double* in, double* out, std::size_t n);

  // out = min(max(in, lo), hi); in and out may alias.
  void (*clamp)(double lo, double hi, const double* in, double* out, std::size_t n);
};

const KernelTable& scalar_kernels();

// Tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

// Best available table, unless REMETRICA_ISA names another available one.
const KernelTable& active_kernels();

}  // namespace simd
}  // namespace remetrica
