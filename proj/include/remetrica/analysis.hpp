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

// Sample-based diagnostics: Lipschitz constants of maps and of composed
// families, the generalized joint spectral radius, and an equicontinuity
// modulus probe. Every estimate here is a lower bound of the quantity it names
// (a max over a finite sample); nothing is extrapolated.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "remetrica/maps.hpp"
#include "remetrica/remetric.hpp"
#include "remetrica/sampler.hpp"

namespace remetrica {

// A distance on the domain: the base metric or the truncated remetric.
using DistanceOracle = std::function<double(const Point&, const Point&)>;

DistanceOracle base_distance_oracle(const MetricSpace& space);
// rho lower bound (truncated series) for the given family and parameters.
DistanceOracle remetric_oracle(const Ifs& ifs, const RemetricParams& params);

struct LipschitzEstimate {
  double value = 0.0;
  std::optional<PointPair> witness;  // pair realizing value
  std::size_t sample_count = 0;      // pairs with positive distance
};

// max over pairs of d(f x, f y) / d(x, y). Pairs at distance 0 are skipped;
// throws Error(no_pairs) if none remain.
LipschitzEstimate lipschitz_estimate(const MapSpec& map, const BoxDomain& domain, const DistanceOracle& metric,
                                     const std::vector<PointPair>& pairs);

// Lower bound of L_d(F^n): max over pairs and over every level-n image pair.
LipschitzEstimate family_lipschitz_estimate(const Ifs& ifs, std::size_t depth, const DistanceOracle& metric,
                                            const std::vector<PointPair>& pairs,
                                            std::size_t budget = kUnlimitedBudget);

struct JsrLevel {
  std::size_t depth;
  double lipschitz;  // L_n estimate
  double root;       // L_n^(1/n)
};

// Heuristic: finite n and sampled lower bounds, so the roots only suggest
// where r_d(F) sits. No acceleration; every level is reported.
struct JsrEstimate {
  std::vector<JsrLevel> per_level;
  double final_root = 0.0;
};

JsrEstimate jsr_estimate(const Ifs& ifs, const DistanceOracle& metric, const std::vector<PointPair>& pairs,
                         std::size_t n_max, std::size_t budget = kUnlimitedBudget);

// Certified family-power check: for every pair and every level-n image pair
// (a, b), rho_lower(a, b) <= (1 + eps)^n * rho_upper(x, y).
struct PowerBoundReport {
  std::size_t depth = 0;
  std::size_t checked = 0;  // image pairs compared
  std::size_t violations = 0;
  std::size_t uncertified = 0;  // comparisons whose right-hand side was truncated
  double max_ratio = 0.0;       // max lower(a, b) / ((1 + eps)^n upper(x, y))
  bool passed() const { return violations == 0; }
};

PowerBoundReport verify_power_bound(const Ifs& ifs, const RemetricParams& params, std::size_t depth,
                                    const std::vector<PointPair>& pairs);

struct ModulusConfig {
  std::uint64_t seed = 0;
  std::size_t random_samples = 64;  // per radius, on top of the axis ladder
  std::size_t budget = kUnlimitedBudget;
};

struct RadiusVerdict {
  double radius;
  bool accepted;
  std::size_t samples;            // probe points y with d(x, y) < radius
  double worst;                   // max family displacement seen
  std::optional<PointPair> witness;  // (x, y) breaking eps_out when rejected
};

struct ModulusReport {
  std::optional<double> delta;  // largest accepted radius
  std::vector<RadiusVerdict> radii;
};

// Pointwise equicontinuity probe at x for the family F^depth: a radius is
// accepted when every sampled y with d(x, y) < radius has
// max_{f in F^depth} d(f x, f y) < eps_out. Sample based and one-sided: an
// acceptance proves nothing, a rejection carries a concrete witness.
ModulusReport modulus_probe(const Ifs& ifs, std::size_t depth, const Point& x, double eps_out,
                            const std::vector<double>& radii, const ModulusConfig& config = {});

struct UniformModulusReport {
  std::optional<double> delta;  // min over grid points; nullopt if some point accepted nothing
  std::optional<Point> weakest_point;
  std::size_t points = 0;
};

// Runs modulus_probe at every point of a regular grid and reports the smallest delta.
UniformModulusReport uniform_modulus_probe(const Ifs& ifs, std::size_t depth, double eps_out,
                                           const std::vector<double>& radii, std::size_t grid_points_per_axis,
                                           const ModulusConfig& config = {});

}  // namespace remetrica
