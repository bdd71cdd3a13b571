// tests/dtw_test.cc

// Copyright 2026  The ttskit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.h"
#include "ttskit/dtw.h"
#include "ttskit/error.h"

namespace ttskit {
namespace {

using Rows = std::vector<std::vector<double>>;

FeatureSeq Seq(const Rows &rows) { return FeatureSeq::FromRows(rows, FeatureKind::kMfcc); }

FeatureSeq Scalar(const std::vector<double> &v) {
  Rows rows;
  for (double x : v) rows.push_back({x});
  return Seq(rows);
}

TEST(DtwTest, IdentityIsDiagonalAndFree) {
  const FeatureSeq a = Seq({{1, 2}, {3, 4}, {0, -1}});
  const DtwAlignment al = DtwAlign(a, a);
  EXPECT_EQ(al.total_cost, 0.0);
  ASSERT_EQ(al.path.size(), 3u);
  for (size_t k = 0; k < 3; k++) EXPECT_EQ(al.path[k], std::make_pair(k, k));
}

TEST(DtwTest, RepeatedFrameIsAbsorbed) {
  const DtwAlignment al = DtwAlign(Scalar({0, 1, 2}), Scalar({0, 1, 1, 2}));
  EXPECT_EQ(al.total_cost, 0.0);
  EXPECT_EQ(al.path.size(), 4u);
}

TEST(DtwTest, SingleFrameAgainstTwo) {
  const DtwAlignment al = DtwAlign(Scalar({0}), Scalar({5, 5}));
  EXPECT_EQ(al.total_cost, 10.0);
  const std::vector<std::pair<size_t, size_t>> want = {{0, 0}, {0, 1}};
  EXPECT_EQ(al.path, want);
}

TEST(DtwTest, TieBreakPrefersDiagonal) {
  // All distances are zero, so every path is optimal.
  const DtwAlignment al = DtwAlign(Scalar({1, 1, 1}), Scalar({1, 1}));
  const std::vector<std::pair<size_t, size_t>> want = {{0, 0}, {1, 0}, {2, 1}};
  EXPECT_EQ(al.path, want);
}

TEST(DtwTest, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 6), dim(1, 3);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (int trial = 0; trial < 300; trial++) {
    const int d = dim(rng);
    auto make = [&] {
      Rows rows(len(rng), std::vector<double>(d));
      for (auto &r : rows)
        for (auto &x : r) x = val(rng);
      return rows;
    };
    const Rows a = make(), b = make();
    const DtwAlignment al = DtwAlign(Seq(a), Seq(b));
    const double oracle = testing::ExhaustiveDtwCost(a, b);
    ASSERT_NEAR(al.total_cost, oracle, 1e-12) << "trial " << trial;
    // Path is monotone unit-step and its cost adds up.
    ASSERT_EQ(al.path.front(), std::make_pair(size_t{0}, size_t{0}));
    ASSERT_EQ(al.path.back(), std::make_pair(a.size() - 1, b.size() - 1));
    double sum = 0.0;
    for (size_t k = 0; k < al.path.size(); k++) {
      const auto [i, j] = al.path[k];
      sum += EuclideanDistance(a[i], b[j]);
      if (k > 0) {
        const auto [pi, pj] = al.path[k - 1];
        ASSERT_TRUE(i - pi <= 1 && j - pj <= 1 && (i - pi) + (j - pj) >= 1);
      }
    }
    ASSERT_NEAR(sum, al.total_cost, 1e-12);
    ASSERT_NEAR(DtwAlign(Seq(b), Seq(a)).total_cost, al.total_cost, 1e-12);
    ASSERT_EQ(DtwAlign(Seq(a), Seq(a)).total_cost, 0.0);
  }
}

TEST(DtwTest, Errors) {
  try {
    DtwAlign(Seq({}), Scalar({1}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptySequence);
  }
  try {
    DtwAlign(Seq({{1, 2}}), Scalar({1}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

}  // namespace
}  // namespace ttskit
