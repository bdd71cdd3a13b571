// tests/griffin_lim_test.cc

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
#include "ttskit/griffin_lim.h"

namespace ttskit {
namespace {

double ErrorAfter(const FeatureSeq &target, int iters, size_t n) {
  GriffinLimOptions opts;
  opts.n_iters = iters;
  opts.seed = 1;
  opts.num_samples = n;
  const Waveform y = GriffinLim(target, StftConfig{}, 22050, opts);
  return SpectralConvergence(target, Stft(y, StftConfig{}));
}

TEST(GriffinLimTest, ZeroSpectrogramGivesSilence) {
  const FeatureSeq zeros = FeatureSeq::FromRows(
      std::vector<std::vector<double>>(10, std::vector<double>(513, 0.0)),
      FeatureKind::kMagnitudeSpectrogram, 22050.0 / 256);
  const Waveform y = GriffinLim(zeros, StftConfig{}, 22050);
  EXPECT_EQ(y.size(), 256u * 9);
  for (double s : y.samples()) EXPECT_EQ(s, 0.0);
}

TEST(GriffinLimTest, SineConvergesAndErrorIsMonotone) {
  const Waveform x = testing::Sine(440.0, 1.0, 22050);
  const FeatureSeq target = Stft(x, StftConfig{});
  double prev = 1e300;
  for (int iters : {1, 2, 4, 8, 16, 32}) {
    const double err = ErrorAfter(target, iters, x.size());
    EXPECT_LE(err, prev + 1e-12) << iters;
    prev = err;
  }
  EXPECT_LT(prev, 0.1);
}

TEST(GriffinLimTest, PlainRandomInitIsMonotone) {
  const Waveform x = testing::Sine(440.0, 0.5, 22050);
  const FeatureSeq target = Stft(x, StftConfig{});
  double prev = 1e300;
  for (int iters : {1, 4, 16, 32}) {
    GriffinLimOptions opts;
    opts.n_iters = iters;
    opts.init = PhaseInit::kRandom;
    opts.num_samples = x.size();
    const double err =
        SpectralConvergence(target, Stft(GriffinLim(target, StftConfig{}, 22050, opts), StftConfig{}));
    EXPECT_LE(err, prev + 1e-12) << iters;
    prev = err;
  }
}

TEST(GriffinLimTest, SameSeedSameOutput) {
  const FeatureSeq target = Stft(testing::WhiteNoise(0.3, 22050, 0.2, 4), StftConfig{});
  GriffinLimOptions opts;
  opts.n_iters = 4;
  opts.seed = 9;
  EXPECT_EQ(GriffinLim(target, StftConfig{}, 22050, opts),
            GriffinLim(target, StftConfig{}, 22050, opts));
}

TEST(SpectralConvergenceTest, EdgeCases) {
  const auto z = FeatureSeq::FromRows({{0.0, 0.0}}, FeatureKind::kMagnitudeSpectrogram);
  const auto o = FeatureSeq::FromRows({{1.0, 0.0}}, FeatureKind::kMagnitudeSpectrogram);
  EXPECT_EQ(SpectralConvergence(z, z), 0.0);
  EXPECT_TRUE(std::isinf(SpectralConvergence(z, o)));
  EXPECT_EQ(SpectralConvergence(o, z), 1.0);
}

}  // namespace
}  // namespace ttskit
