// include/ttskit/stft.h

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

#ifndef TTSKIT_STFT_H_
#define TTSKIT_STFT_H_

#include <complex>
#include <vector>

#include "ttskit/feature_seq.h"
#include "ttskit/waveform.h"

namespace ttskit {

enum class WindowType { kHann };

struct StftConfig {
  int fft_size = 1024;
  int win_length = 1024;
  int hop_length = 256;
  WindowType window = WindowType::kHann;

  /// Throws kInvalidConfig unless 0 < hop <= win <= fft.
  void Validate() const;
  bool operator==(const StftConfig &) const = default;
};

/// Periodic Hann window of the given length.
std::vector<double> HannWindow(int length);

/// Frames are centered: the signal is reflect-padded by win_length/2 on both
/// ends, so frame t is centered on sample t * hop_length.
size_t NumStftFrames(size_t num_samples, const StftConfig &cfg);

/// Magnitude spectrogram, T x (fft_size/2 + 1), frame_rate = rate / hop.
FeatureSeq Stft(const Waveform &wave, const StftConfig &cfg);

/// Complex STFT frames, same framing as Stft().
std::vector<std::vector<std::complex<double>>> ComplexStft(
    const Waveform &wave, const StftConfig &cfg);

/// Weighted overlap-add inverse of ComplexStft. The result has
/// `num_samples` samples; pass hop * (T - 1) when the original length is
/// unknown.
Waveform InverseStft(const std::vector<std::vector<std::complex<double>>> &frames,
                     const StftConfig &cfg, int sample_rate, size_t num_samples);

}  // namespace ttskit

#endif  // TTSKIT_STFT_H_
