// tests/resample_test.cc

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
#include "ttskit/resample.h"
#include "ttskit/stft.h"

namespace ttskit {
namespace {

TEST(ResampleTest, SameRateIsIdentity) {
  const Waveform w = testing::WhiteNoise(0.1, 16000, 0.3, 2);
  EXPECT_EQ(Resample(w, 16000), w);
}

TEST(ResampleTest, LengthFollowsRateRatio) {
  const Waveform w = testing::Sine(100.0, 1.0, 44100);
  const Waveform r = Resample(w, 22050);
  EXPECT_NEAR(static_cast<double>(r.size()), 22050.0, 1.0);
  EXPECT_EQ(r.sample_rate(), 22050);
  EXPECT_NEAR(static_cast<double>(Resample(w, 16000).size()), 16000.0, 1.0);
}

TEST(ResampleTest, PreservesSineFrequency) {
  const Waveform r = Resample(testing::Sine(100.0, 1.0, 44100), 22050);
  // Whole-signal DFT with a long frame: 1 bin = 22050 / 16384 Hz.
  StftConfig cfg;
  cfg.fft_size = cfg.win_length = 16384;
  cfg.hop_length = 4096;
  const FeatureSeq spec = Stft(r, cfg);
  const auto row = spec.Row(spec.num_frames() / 2);
  const size_t peak = std::max_element(row.begin(), row.end()) - row.begin();
  const double expected_bin = 100.0 * 16384 / 22050;
  EXPECT_LE(std::abs(static_cast<double>(peak) - expected_bin), 1.0);
  // Interior amplitude survives the band-limited filter.
  double peak_amp = 0.0;
  for (size_t i = 2000; i < r.size() - 2000; i++)
    peak_amp = std::max(peak_amp, std::abs(r.samples()[i]));
  EXPECT_NEAR(peak_amp, 1.0, 0.01);
}

TEST(ResampleTest, RejectsBadRate) {
  try {
    Resample(testing::Sine(100.0, 0.1, 16000), 0);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidRate);
  }
}

}  // namespace
}  // namespace ttskit
