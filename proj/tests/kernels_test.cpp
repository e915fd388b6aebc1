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

#include <limits>
#include <random>

#include "remetrica/point_batch.hpp"
#include "remetrica/simd/kernels.hpp"
#include "test_util.hpp"

namespace remetrica {
namespace {

using testing::same_bits;

PointBatch random_batch(std::size_t dim, std::size_t n, std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  PointBatch b(dim);
  std::uniform_real_distribution<double> u(lo, hi);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(dim);
    for (double& v : c) v = u(rng);
    b.push_back(Point(std::move(c)));
  }
  return b;
}

TEST(Kernels, ScalarIsAlwaysAvailableFirst) {
  const auto tables = simd::available_kernels();
  ASSERT_FALSE(tables.empty());
  EXPECT_EQ(tables.front()->isa, simd::Isa::scalar);
  bool active_listed = false;
  for (const auto* t : tables) active_listed |= t == &simd::active_kernels();
  EXPECT_TRUE(active_listed);
}

// Every variant must reproduce the scalar reference bit for bit, including the
// ragged tails that fall outside full vector blocks.
TEST(Kernels, DistancesMatchScalarBitForBit) {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  for (const auto* table : simd::available_kernels()) {
    for (std::size_t dim : {1U, 2U, 3U, 5U}) {
      for (std::size_t n : {0U, 1U, 3U, 4U, 5U, 17U, 64U, 131U}) {
        for (BaseMetric metric : {BaseMetric::euclidean, BaseMetric::normalized_euclidean}) {
          const PointBatch a = random_batch(dim, n, rng);
          const PointBatch b = random_batch(dim, n, rng);
          std::vector<double> want(n), got(n);
          ref.pair_distances(metric, a.view(), b.view(), want.data());
          table->pair_distances(metric, a.view(), b.view(), got.data());
          for (std::size_t i = 0; i < n; ++i)
            ASSERT_TRUE(same_bits(want[i], got[i])) << simd::to_string(table->isa) << " dim=" << dim << " i=" << i;
          EXPECT_TRUE(same_bits(ref.max_pair_distance(metric, a.view(), b.view()),
                                table->max_pair_distance(metric, a.view(), b.view())));

          std::vector<double> q(dim, 0.25);
          const double inf = std::numeric_limits<double>::infinity();
          EXPECT_TRUE(same_bits(ref.min_distance(metric, q.data(), b.view(), -inf),
                                table->min_distance(metric, q.data(), b.view(), -inf)));
        }
      }
    }
  }
}

TEST(Kernels, EarlyExitReturnsValueBelowThreshold) {
  std::mt19937_64 rng(11);
  const PointBatch set = random_batch(2, 300, rng);
  const std::vector<double> q{0.0, 0.0};
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto* table : simd::available_kernels()) {
    const double exact = table->min_distance(BaseMetric::euclidean, q.data(), set.view(), -inf);
    const double stop = exact * 4.0;
    const double early = table->min_distance(BaseMetric::euclidean, q.data(), set.view(), stop);
    EXPECT_LT(early, stop);
    EXPECT_GE(early, exact);
    // A threshold at or below the true minimum never triggers.
    EXPECT_TRUE(same_bits(exact, table->min_distance(BaseMetric::euclidean, q.data(), set.view(), exact)));
  }
}

TEST(Kernels, MapPrimitivesMatchScalarBitForBit) {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(3);
  for (const auto* table : simd::available_kernels()) {
    for (std::size_t dim : {1U, 2U, 3U}) {
      for (std::size_t n : {0U, 2U, 4U, 7U, 33U}) {
        const PointBatch in = random_batch(dim, n, rng, -1.0, 1.0);
        std::vector<double> matrix(dim * dim), offset(dim);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (double& v : matrix) v = u(rng);
        for (double& v : offset) v = u(rng);
        PointBatch want(dim), got(dim);
        want.resize(n);
        got.resize(n);
        ref.affine(matrix.data(), offset.data(), in.view(), want.mutable_view());
        table->affine(matrix.data(), offset.data(), in.view(), got.mutable_view());
        for (std::size_t c = 0; c < dim; ++c)
          for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(same_bits(want.at(c, i), got.at(c, i)));
      }
    }

    std::vector<double> in{0.0, -0.0, 0.25, 1e-300, 2.0, 0.5, 0.75, 1.5, 3.0, -0.5, 1e-12};
    std::vector<double> want(in.size()), got(in.size());
    std::vector<double> positive(in);
    for (double& v : positive) v = v < 0.0 ? -v : v;
    ref.sqrt(positive.data(), want.data(), positive.size());
    table->sqrt(positive.data(), got.data(), positive.size());
    for (std::size_t i = 0; i < in.size(); ++i) EXPECT_TRUE(same_bits(want[i], got[i]));

    // -0.0 against a 0.0 bound must come out identically in every variant.
    ref.clamp(0.0, 1.0, in.data(), want.data(), in.size());
    table->clamp(0.0, 1.0, in.data(), got.data(), in.size());
    for (std::size_t i = 0; i < in.size(); ++i) EXPECT_TRUE(same_bits(want[i], got[i])) << i;
  }
}

TEST(Kernels, OneDimensionalDistanceIsAbsoluteDifference) {
  const std::vector<double> a{0.0, 1e-200, 3.0, 1.0};
  const std::vector<double> b{1.0, 0.0, 1.0, 0.0};
  const double* pa = a.data();
  const double* pb = b.data();
  std::vector<double> out(4);
  for (const auto* table : simd::available_kernels()) {
    table->pair_distances(BaseMetric::euclidean, {&pa, 1, 4}, {&pb, 1, 4}, out.data());
    EXPECT_EQ(out[0], 1.0);
    EXPECT_EQ(out[1], 1e-200);  // no underflow through squaring
    EXPECT_EQ(out[2], 2.0);
    table->pair_distances(BaseMetric::normalized_euclidean, {&pa, 1, 4}, {&pb, 1, 4}, out.data());
    EXPECT_EQ(out[3], 0.5);
  }
}

}  // namespace
}  // namespace remetrica
