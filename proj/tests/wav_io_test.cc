// tests/wav_io_test.cc

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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>

#include "support/synth.h"
#include "ttskit/error.h"
#include "ttskit/waveform.h"

namespace ttskit {
namespace {

namespace fs = std::filesystem;

fs::path TempPath(const std::string &name) {
  return fs::temp_directory_path() / ("ttskit_wav_io_" + name);
}

template <typename T>
void Put(std::ofstream &f, T v) {
  f.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

TEST(WavIoTest, SixteenBitRoundTripIsExactOnGrid) {
  std::vector<double> samples;
  for (int v : {-32768, -1, 0, 1, 12345, 32767}) samples.push_back(v / 32768.0);
  const Waveform w(samples, 16000);
  const auto path = TempPath("grid.wav").string();
  WriteWav(path, w);
  const Waveform back = ReadWav(path);
  EXPECT_EQ(back.sample_rate(), 16000);
  ASSERT_EQ(back.size(), samples.size());
  for (size_t i = 0; i < samples.size(); i++) EXPECT_EQ(back.samples()[i], samples[i]);
}

TEST(WavIoTest, RoundTripWithinQuantization) {
  const Waveform w = testing::Sine(330.0, 0.2, 22050, 0.7);
  const auto path = TempPath("sine.wav").string();
  WriteWav(path, w);
  const Waveform back = ReadWav(path);
  ASSERT_EQ(back.size(), w.size());
  for (size_t i = 0; i < w.size(); i++)
    EXPECT_NEAR(back.samples()[i], w.samples()[i], 0.5 / 32768 + 1e-12);
}

TEST(WavIoTest, ClipsOutOfRange) {
  const auto path = TempPath("clip.wav").string();
  WriteWav(path, Waveform({2.0, -2.0}, 8000));
  const Waveform back = ReadWav(path);
  EXPECT_EQ(back.samples()[0], 32767 / 32768.0);
  EXPECT_EQ(back.samples()[1], -1.0);
}

TEST(WavIoTest, RejectsStereo) {
  const auto path = TempPath("stereo.wav");
  {
    std::ofstream f(path, std::ios::binary);
    f.write("RIFF", 4);
    Put<uint32_t>(f, 36 + 8);
    f.write("WAVEfmt ", 8);
    Put<uint32_t>(f, 16);
    Put<uint16_t>(f, 1);
    Put<uint16_t>(f, 2);
    Put<uint32_t>(f, 16000);
    Put<uint32_t>(f, 16000 * 4);
    Put<uint16_t>(f, 4);
    Put<uint16_t>(f, 16);
    f.write("data", 4);
    Put<uint32_t>(f, 8);
    for (int i = 0; i < 4; i++) Put<int16_t>(f, 100);
  }
  try {
    ReadWav(path.string());
    FAIL() << "stereo accepted";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFormat);
  }
}

TEST(WavIoTest, MissingFileIsIoError) {
  try {
    ReadWav(TempPath("does_not_exist.wav").string());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(WaveformTest, RejectsBadRateAndNonFinite) {
  EXPECT_THROW(Waveform({0.0}, 0), Error);
  EXPECT_THROW(Waveform({std::nan("")}, 16000), Error);
}

}  // namespace
}  // namespace ttskit
