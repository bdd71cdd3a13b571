// include/ttskit/mel.h

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

#ifndef TTSKIT_MEL_H_
#define TTSKIT_MEL_H_

#include <optional>
#include <span>
#include <vector>

#include "ttskit/feature_seq.h"
#include "ttskit/stft.h"
#include "ttskit/waveform.h"

namespace ttskit {

/// Floor added to mel power before taking the log.
inline constexpr double kLogMelFloor = 1e-10;

struct MelConfig {
  int n_mels = 80;
  double f_min = 0.0;
  /// Upper band edge; unset means Nyquist of the signal being analyzed.
  std::optional<double> f_max;
  StftConfig stft;

  double UpperEdge(int sample_rate) const {
    return f_max.value_or(sample_rate / 2.0);
  }
  /// Throws kInvalidConfig unless 0 <= f_min < f_max <= rate/2, n_mels >= 1.
  void Validate(int sample_rate) const;
};

/// HTK mel scale: 2595 * log10(1 + hz / 700).
double HzToMel(double hz);
double MelToHz(double mel);

/// Triangular filterbank on the power spectrum (no area normalization).
/// Returns n_mels rows of fft_size/2 + 1 weights.
std::vector<std::vector<double>> MelFilterbank(const MelConfig &cfg,
                                               int sample_rate);

/// Center frequency in Hz of every mel band.
std::vector<double> MelCenterFrequencies(const MelConfig &cfg, int sample_rate);

/// ln(mel-filtered power + kLogMelFloor), T x n_mels.
FeatureSeq LogMel(const Waveform &wave, const MelConfig &cfg);

/// Orthonormal DCT-II of a single vector; returns all N coefficients.
std::vector<double> DctII(std::span<const double> x);

/// Cepstral coefficients c1..c{n_coeffs} of each log-mel frame (c0 dropped).
FeatureSeq MfccFromLogMel(const FeatureSeq &log_mel, int n_coeffs = 13);

FeatureSeq Mfcc(const Waveform &wave, const MelConfig &cfg, int n_coeffs = 13);

}  // namespace ttskit

#endif  // TTSKIT_MEL_H_
