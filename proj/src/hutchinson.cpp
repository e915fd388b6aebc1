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

#include "remetrica/hutchinson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "remetrica/error.hpp"

namespace remetrica {

FinitePointSet hutchinson_apply(const Ifs& ifs, const FinitePointSet& a, double snap) {
  if (!(snap >= 0.0) || !std::isfinite(snap)) throw Error(ErrorKind::params, "snap must be finite and nonnegative");
  const auto& kernels = simd::active_kernels();
  const BoxDomain& domain = ifs.domain();
  PointBatch images(a.dim());
  images.reserve(a.size() * ifs.size());
  PointBatch img(a.dim());
  for (std::size_t i = 0; i < ifs.size(); ++i) {
    ifs.map(i).eval_batch(a.batch(), img, domain, kernels);
    for (std::size_t p = 0; p < img.size(); ++p) images.push_back_from(img, p);
  }
  if (snap > 0.0) {
    for (std::size_t c = 0; c < images.dim(); ++c) {
      auto col = images.column(c);
      for (double& v : col) v = std::clamp(std::round(v / snap) * snap, domain.lower()[c], domain.upper()[c]);
    }
  }
  return FinitePointSet(domain, images);
}

double hausdorff_with(const DistanceOracle& metric, const FinitePointSet& a, const FinitePointSet& b) {
  auto directed = [&](const FinitePointSet& from, const FinitePointSet& to) {
    double worst = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      const Point p = from.point(i);
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < to.size(); ++j) nearest = std::min(nearest, metric(p, to.point(j)));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

AttractorResult attractor_iterate(const Ifs& ifs, const FinitePointSet& initial, std::size_t steps, double snap,
                                  const std::vector<NamedMetric>& extra_metrics, std::size_t set_cap) {
  if (steps == 0) throw Error(ErrorKind::params, "attractor iteration needs at least one step");
  AttractorResult result{initial, {}};
  result.log.snap = snap;
  for (const auto& m : extra_metrics) result.log.extra_metrics.push_back(m.name);

  for (std::size_t t = 0; t < steps; ++t) {
    if (result.final_set.size() * ifs.size() > set_cap) {
      result.log.capped = true;
      break;
    }
    FinitePointSet next = hutchinson_apply(ifs, result.final_set, snap);
    IterationStep entry{t, next.size(), hausdorff(ifs.space(), result.final_set, next), {}};
    for (const auto& m : extra_metrics) entry.hausdorff_extra.push_back(hausdorff_with(m.metric, result.final_set, next));
    result.log.steps.push_back(std::move(entry));
    result.final_set = std::move(next);
  }
  return result;
}

}  // namespace remetrica
