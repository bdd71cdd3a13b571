// tests/distortion_test.cc

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

#include "support/synth.h"
#include "ttskit/error.h"
#include "ttskit/metrics.h"

namespace ttskit {
namespace {

TEST(DistortionTest, SingleFrameArithmetic) {
  std::vector<double> a(13, 0.0), b(13, 0.0);
  b[0] = 3.0;
  b[1] = 4.0;
  const auto r = FeatureDistortion(FeatureSeq::FromRows({a}, FeatureKind::kMfcc),
                                   FeatureSeq::FromRows({b}, FeatureKind::kMfcc));
  EXPECT_NEAR(r.value, std::sqrt(25.0 / 13.0), 1e-12);
  EXPECT_NEAR(r.value, 1.3868, 1e-4);
  EXPECT_EQ(r.path_length, 1u);
}

TEST(DistortionTest, MeanOverPath) {
  // Two frames, D = 2, differences (1,1) and (0,0): sqrt((2/2 + 0) / 2).
  const auto r = FeatureDistortion(
      FeatureSeq::FromRows({{0, 0}, {5, 5}}, FeatureKind::kLogMel),
      FeatureSeq::FromRows({{1, 1}, {5, 5}}, FeatureKind::kLogMel));
  EXPECT_NEAR(r.value, std::sqrt(0.5), 1e-12);
}

TEST(DistortionTest, SelfDistanceIsZero) {
  const Waveform w = testing::Concat(
      {testing::Sine(200.0, 0.3, 22050, 0.5), testing::WhiteNoise(0.2, 22050, 0.1, 3)});
  EXPECT_EQ(Mcd(w, w).value, 0.0);
  EXPECT_EQ(Msd(w, w).value, 0.0);
}

TEST(DistortionTest, FrameDuplicationIsAbsorbed) {
  const FeatureSeq a = Mfcc(testing::WhiteNoise(0.3, 22050, 0.3, 8), MelConfig{});
  std::vector<std::vector<double>> rows;
  for (size_t t = 0; t < a.num_frames(); t++) {
    rows.emplace_back(a.Row(t).begin(), a.Row(t).end());
    rows.emplace_back(a.Row(t).begin(), a.Row(t).end());
  }
  const FeatureSeq dup = FeatureSeq::FromRows(rows, FeatureKind::kMfcc, a.frame_rate());
  const auto r = FeatureDistortion(a, dup);
  EXPECT_LE(r.value, 1e-9);
  EXPECT_EQ(r.path_length, dup.num_frames());
}

TEST(DistortionTest, LoudnessChangeShowsInMsd) {
  const Waveform w = testing::Sine(300.0, 0.5, 22050, 0.4);
  std::vector<double> louder(w.samples().begin(), w.samples().end());
  for (double &s : louder) s *= 2.0;
  const auto r = Msd(w, Waveform(louder, 22050));
  EXPECT_GT(r.value, 0.0);
}

TEST(DistortionTest, Errors) {
  const Waveform a = testing::Sine(300.0, 0.1, 22050), b = testing::Sine(300.0, 0.1, 16000);
  try {
    Mcd(a, b);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRateMismatch);
  }
  try {
    Msd(a, Waveform({}, 22050));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptySignal);
  }
}

}  // namespace
}  // namespace ttskit
