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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "remetrica/error.hpp"
#include "remetrica/remetric.hpp"
#include "remetrica/sampler.hpp"
#include "test_util.hpp"

namespace remetrica {
namespace {

using testing::unit_euclidean;

RemetricParams params(double eps, std::size_t depth, std::size_t budget = kUnlimitedBudget) {
  RemetricParams p;
  p.epsilon = eps;
  p.depth = depth;
  p.budget = budget;
  return p;
}

// Oracle: sum the series straight from the orbit, no level machinery.
double orbit_sum(const MapSpec& f, const BoxDomain& box, double eps, std::size_t n, double x, double y) {
  double total = std::abs(x - y);
  Point fx{x}, fy{y};
  for (std::size_t i = 1; i <= n; ++i) {
    fx = f.eval(fx, box);
    fy = f.eval(fy, box);
    total += std::abs(fx[0] - fy[0]) / std::pow(1.0 + eps, static_cast<double>(i));
  }
  return total;
}

TEST(TailBound, Examples) {
  const MetricSpace unit = unit_euclidean();
  EXPECT_DOUBLE_EQ(tail_bound(unit, 1.0, 20), 9.5367431640625e-07);
  EXPECT_DOUBLE_EQ(tail_bound(unit, 0.25, 0), 4.0);
  EXPECT_DOUBLE_EQ(tail_bound(unit, 3.0, 0), 1.0 / 3.0);
  EXPECT_NEAR(tail_bound(unit, 0.5, 36), 9.156819842364336e-07, 1e-21);
  EXPECT_THROW(tail_bound(unit, 0.0, 3), Error);
  EXPECT_THROW(tail_bound(unit, -1.0, 3), Error);
}

TEST(TailBound, ScalesWithDiameter) {
  const MetricSpace wide = MetricSpace::euclidean(BoxDomain(Point{0.0, 0.0}, Point{3.0, 4.0}));
  EXPECT_DOUBLE_EQ(tail_bound(wide, 1.0, 1), 2.5);
  EXPECT_DOUBLE_EQ(tail_bound(normalize(wide), 1.0, 1), 0.5);
}

TEST(SelectDepth, MeetsTheTolerance) {
  const MetricSpace unit = unit_euclidean();
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    for (double tol : {1e-2, 1e-6, 1e-9}) {
      const DepthSelection s = select_depth(unit, 2, eps, tol);
      EXPECT_FALSE(s.capped);
      EXPECT_LE(s.tail, tol);
      EXPECT_EQ(s.tail, tail_bound(unit, eps, s.depth));
      if (s.depth > 0) {
        EXPECT_GT(tail_bound(unit, eps, s.depth - 1), tol);
      }
    }
  }
  EXPECT_EQ(select_depth(unit, 1, 1.0, 1e-6).depth, 20U);
  EXPECT_EQ(select_depth(unit, 1, 0.5, 1e-6).depth, 36U);
}

TEST(SelectDepth, MaxDepthCapReportsAchievedTail) {
  const DepthSelection s = select_depth(unit_euclidean(), 2, 0.01, 1e-12, kUnlimitedBudget, 50);
  EXPECT_TRUE(s.capped);
  EXPECT_EQ(s.depth, 50U);
  EXPECT_EQ(s.tail, tail_bound(unit_euclidean(), 0.01, 50));
}

TEST(SelectDepth, RejectsBadParameters) {
  EXPECT_THROW(select_depth(unit_euclidean(), 1, 0.0, 1e-3), Error);
  EXPECT_THROW(select_depth(unit_euclidean(), 1, 1.0, 0.0), Error);
  EXPECT_THROW(select_depth(unit_euclidean(), 0, 1.0, 1e-3), Error);
}

TEST(RemetricDistance, IdentityClosedForm) {
  const Ifs id(unit_euclidean(), {MapSpec::identity(1)});
  const CertifiedDistance r = remetric_distance(id, params(1.0, 10), Point{0.0}, Point{0.2});
  EXPECT_NEAR(r.lower, 0.2 * (2.0 - std::ldexp(1.0, -10)), 1e-15);
  EXPECT_NEAR(r.lower, 0.3998046875, 1e-15);
  EXPECT_EQ(r.upper, r.lower + std::ldexp(1.0, -10));
  EXPECT_TRUE(r.exact_levels);
}

TEST(RemetricDistance, ConstantFamilyGivesBaseDistance) {
  const Ifs c(unit_euclidean(), {MapSpec::constant({0.4})});
  const CertifiedDistance r = remetric_distance(c, params(0.5, 12), Point{0.1}, Point{0.85});
  EXPECT_DOUBLE_EQ(r.lower, 0.75);
  EXPECT_NEAR(r.upper - r.lower, tail_bound(unit_euclidean(), 0.5, 12), 1e-16);
}

TEST(RemetricDistance, SqrtThreeLevels) {
  const Ifs sq(unit_euclidean(), {MapSpec::power(0.5)});
  const double want = 0.25 + 0.5 / 2 + std::sqrt(0.5) / 4 + std::pow(0.25, 0.125) / 8;
  const CertifiedDistance r = remetric_distance(sq, params(1.0, 3), Point{0.0}, Point{0.25});
  EXPECT_NEAR(r.lower, want, 1e-15);
  EXPECT_NEAR(r.lower, 0.78189, 5e-6);
  EXPECT_NEAR(single_map_distance(MapSpec::power(0.5), unit_euclidean(), params(1.0, 3), Point{0.0}, Point{0.25}).lower,
              want, 1e-15);
}

TEST(RemetricDistance, DepthZeroIsTheBaseMetric) {
  const Ifs ifs = testing::sqrt_half_ifs();
  const CertifiedDistance r = remetric_distance(ifs, params(2.0, 0), Point{0.3}, Point{0.7});
  EXPECT_DOUBLE_EQ(r.lower, 0.4);
  EXPECT_DOUBLE_EQ(r.upper, 0.4 + 0.5);
}

TEST(RemetricDistance, RejectsBadParameters) {
  const Ifs ifs = testing::sqrt_half_ifs();
  EXPECT_THROW(remetric_distance(ifs, params(0.0, 3), Point{0.0}, Point{1.0}), Error);
  EXPECT_THROW(remetric_distance(ifs, params(1.0, 3, 0), Point{0.0}, Point{1.0}), Error);
}

TEST(SingleMapDistance, GeometricLimits) {
  const MetricSpace unit = unit_euclidean();
  EXPECT_NEAR(single_map_distance(MapSpec::identity(1), unit, params(0.5, 200), Point{0.1}, Point{0.4}).lower, 0.9,
              1e-13);
  EXPECT_NEAR(single_map_distance(MapSpec::scale(0.5), unit, params(1.0, 60), Point{0.0}, Point{1.0}).lower,
              4.0 / 3.0, 1e-15);
}

TEST(SingleMapDistance, AgreesWithTheOneMapFamily) {
  std::mt19937_64 rng(77);
  const std::vector<MapSpec> maps = {MapSpec::power(0.5), MapSpec::power(2.5), MapSpec::scale(0.3, 0.6),
                                     MapSpec::compose(MapSpec::scale(0.9), MapSpec::power(0.25))};
  for (const MapSpec& m : maps) {
    const Ifs ifs(unit_euclidean(), {m});
    for (int t = 0; t < 20; ++t) {
      const Point x = testing::random_point(ifs.domain(), rng);
      const Point y = testing::random_point(ifs.domain(), rng);
      const auto a = single_map_distance(m, ifs.space(), params(0.7, 25), x, y);
      const auto b = remetric_distance(ifs, params(0.7, 25), x, y);
      EXPECT_EQ(a.lower, b.lower);
      EXPECT_EQ(a.upper, b.upper);
      EXPECT_NEAR(a.lower, orbit_sum(m, ifs.domain(), 0.7, 25, x[0], y[0]), 1e-15);
    }
  }
}

TEST(RemetricDistance, TruncatedMetricAxioms) {
  const Ifs ifs = testing::sqrt_half_ifs();
  const RemetricParams p = params(1.0, 10);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Point x = testing::random_point(ifs.domain(), rng);
    const Point y = testing::random_point(ifs.domain(), rng);
    const Point z = testing::random_point(ifs.domain(), rng);
    const double xy = remetric_distance(ifs, p, x, y).lower;
    const double yz = remetric_distance(ifs, p, y, z).lower;
    const double xz = remetric_distance(ifs, p, x, z).lower;
    EXPECT_EQ(xy, remetric_distance(ifs, p, y, x).lower);
    EXPECT_LE(xz, (xy + yz) * (1.0 + 1e-12));
    EXPECT_GT(xy, 0.0);
    EXPECT_GE(xy, ifs.space().distance(x, y));
    EXPECT_EQ(remetric_distance(ifs, p, x, x).lower, 0.0);
  }
}

TEST(RemetricDistance, MonotoneInDepthAndEpsilon) {
  const Ifs ifs(unit_euclidean(), {MapSpec::power(0.5), MapSpec::scale(0.5), MapSpec::power(3.0)});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Point x = testing::random_point(ifs.domain(), rng);
    const Point y = testing::random_point(ifs.domain(), rng);
    CertifiedDistance previous = remetric_distance(ifs, params(1.0, 0), x, y);
    for (std::size_t n = 1; n <= 8; ++n) {
      const CertifiedDistance r = remetric_distance(ifs, params(1.0, n), x, y);
      ASSERT_TRUE(r.exact_levels);
      EXPECT_GE(r.lower, previous.lower);
      // upper(N) = lower(N-1) + term + tail(N) <= lower(N-1) + tail(N-1); rounding may add an ulp
      EXPECT_LE(r.upper, previous.upper * (1.0 + 1e-15));
      previous = r;
    }
    double last = std::numeric_limits<double>::infinity();
    for (double eps : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double v = remetric_distance(ifs, params(eps, 8), x, y).lower;
      EXPECT_LE(v, last);
      last = v;
    }
  }
}

TEST(RemetricDistance, TruncatedBudgetStillBoundsFromBelow) {
  const Ifs ifs(unit_euclidean(), {MapSpec::power(0.5), MapSpec::power(3.0), MapSpec::scale(0.6, 0.2)});
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    const Point x = testing::random_point(ifs.domain(), rng);
    const Point y = testing::random_point(ifs.domain(), rng);
    const auto full = remetric_distance(ifs, params(1.0, 7), x, y);
    const auto cut = remetric_distance(ifs, params(1.0, 7, 9), x, y);
    EXPECT_TRUE(full.exact_levels);
    EXPECT_FALSE(cut.exact_levels);
    EXPECT_LE(cut.lower, full.lower);
  }
}

TEST(VerifyLipschitzBound, ConstantFamily) {
  const Ifs c(unit_euclidean(), {MapSpec::constant({0.5})});
  PairSampler sampler;
  sampler.uniform_pairs = 50;
  const auto rep = verify_lipschitz_bound(c, params(1.0, 10), sampler.pairs(c.domain()));
  EXPECT_TRUE(rep.passed());
  ASSERT_EQ(rep.maps.size(), 1U);
  EXPECT_EQ(rep.maps[0].max_ratio, 0.0);
  EXPECT_EQ(rep.maps[0].violations, 0U);
}

TEST(VerifyLipschitzBound, IdentityRatioIsNearOne) {
  const Ifs id(unit_euclidean(), {MapSpec::identity(1)});
  PairSampler sampler;
  sampler.uniform_pairs = 50;
  const auto rep = verify_lipschitz_bound(id, params(1.0, 30), sampler.pairs(id.domain()));
  EXPECT_TRUE(rep.passed());
  EXPECT_LE(rep.maps[0].max_ratio, 1.0);
  EXPECT_GT(rep.maps[0].max_ratio, 1.0 - 1e-6);
}

TEST(VerifyLipschitzBound, SkipsCoincidentPairs) {
  const Ifs id(unit_euclidean(), {MapSpec::identity(1)});
  const auto rep = verify_lipschitz_bound(id, params(1.0, 5), {{Point{0.3}, Point{0.3}}, {Point{0.1}, Point{0.2}}});
  EXPECT_EQ(rep.skipped, 1U);
  EXPECT_EQ(rep.maps[0].checked, 1U);
}

TEST(VerifyLipschitzBound, SqrtAndHalvingPass) {
  const Ifs ifs = testing::sqrt_half_ifs();
  PairSampler sampler;
  sampler.uniform_pairs = 40;
  const auto rep = verify_lipschitz_bound(ifs, params(1.0, 12), sampler.pairs(ifs.domain()));
  EXPECT_TRUE(rep.passed());
  for (const auto& m : rep.maps) {
    EXPECT_EQ(m.uncertified, 0U);
    EXPECT_LE(m.max_ratio, 2.0);
    EXPECT_TRUE(m.witness.has_value());
  }
}

}  // namespace
}  // namespace remetrica
