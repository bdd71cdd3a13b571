// tests/support/synth.h

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

#ifndef TTSKIT_TESTS_SUPPORT_SYNTH_H_
#define TTSKIT_TESTS_SUPPORT_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ttskit/waveform.h"

namespace ttskit::testing {

Waveform Sine(double freq_hz, double seconds, int sample_rate,
              double amplitude = 1.0, double phase = 0.0);
Waveform WhiteNoise(double seconds, int sample_rate, double amplitude,
                    uint64_t seed);
Waveform Silence(double seconds, int sample_rate);
Waveform Concat(const std::vector<Waveform> &parts);

struct SyntheticCorpus {
  std::string dir;
  /// Noisy utterances, with hyp_text transcripts of varying quality.
  std::string noisy_manifest;
  /// Clean utterances with identical ids.
  std::string clean_manifest;
  /// Holds `<id>.enhanced.wav` for every noisy `<id>.wav`.
  std::string enhanced_dir;
  size_t num_utterances = 0;
};

/// Writes a reproducible noisy speech-like corpus: harmonic voiced segments
/// separated by pauses of assorted lengths, short clicks inside pauses,
/// leading/trailing silence and white noise at SNRs spread over 0..30 dB.
/// The "enhanced" files are the clean signals.
SyntheticCorpus MakeSyntheticCorpus(const std::string &dir, size_t num_utterances,
                                    uint64_t seed, int sample_rate = 22050);

}  // namespace ttskit::testing

#endif  // TTSKIT_TESTS_SUPPORT_SYNTH_H_
