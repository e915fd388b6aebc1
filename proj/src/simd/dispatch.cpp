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

#include <cstdlib>
#include <string_view>

#include "distance_lane.hpp"

namespace remetrica::simd {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) tables.push_back(&detail::avx2_kernels());
#elif defined(__aarch64__)
  tables.push_back(&detail::neon_kernels());
#endif
  return tables;
}

namespace {

const KernelTable& select_kernels() {
  const auto tables = available_kernels();
  if (const char* forced = std::getenv("REMETRICA_ISA")) {
    for (const KernelTable* t : tables)
      if (std::string_view(forced) == to_string(t->isa)) return *t;
  }
  return *tables.back();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace remetrica::simd
