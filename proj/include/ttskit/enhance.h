// include/ttskit/enhance.h

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

#ifndef TTSKIT_ENHANCE_H_
#define TTSKIT_ENHANCE_H_

#include <cstdint>
#include <vector>

#include "ttskit/waveform.h"

namespace ttskit {

// ---------------------------------------------------------------------------
// Dry/wet mixing of a noisy input with the output of an external enhancer.

struct DryWetConfig {
  /// Weight of the noisy input; the enhanced signal gets 1 - dry.
  double dry = 0.01;
};

struct MixResult {
  Waveform wave;
  /// Samples that fell outside [-1, 1] and were clipped.
  size_t num_clipped = 0;
};

/// dry * noisy + (1 - dry) * enhanced, clipped to [-1, 1].
MixResult DryWetMix(const Waveform &noisy, const Waveform &enhanced,
                    const DryWetConfig &cfg = {});

/// Stand-in enhancer returning its input; lets the pipeline run without an
/// external denoiser.
inline Waveform IdentityEnhance(const Waveform &noisy) { return noisy; }

// ---------------------------------------------------------------------------
// Energy VAD. Raw labels come from per-frame energy against a dBFS
// threshold. Each aggressiveness level L >= 1 intersects the previous level's
// labels with a (2L+1)-frame majority vote of the raw labels and then drops
// speech runs shorter than L+1 frames, so speech at level L+1 is always a
// subset of speech at level L.

struct VadConfig {
  int aggressiveness = 0;
  double frame_ms = 10.0;
  /// Mean-square frame energy in dB relative to full scale.
  double energy_threshold_db = -45.0;

  void Validate() const;
};

struct FrameLabels {
  std::vector<bool> speech;
  double frame_ms = 10.0;

  size_t size() const { return speech.size(); }
  size_t CountSpeech() const;
};

/// Samples per label frame at the given rate.
size_t FrameSamples(double frame_ms, int sample_rate);

/// Rates accepted by VadLabel without resampling.
bool IsVadSampleRate(int sample_rate);

FrameLabels VadLabel(const Waveform &wave, const VadConfig &cfg = {});

// ---------------------------------------------------------------------------
// Silence trimming and compression.

enum class SilenceFill { kZeros, kComfortNoise };

struct SilencePolicy {
  double max_internal_silence_ms = 300.0;
  SilenceFill fill = SilenceFill::kZeros;
  double comfort_noise_level_db = -60.0;
  /// Seeds comfort-noise generation.
  uint64_t seed = 0;
};

/// Removes leading and trailing silence. Internal silence runs longer than
/// the limit are replaced by exactly max_internal_silence_ms of fill; runs at
/// or below the limit are kept verbatim. Throws kAllSilence when no frame is
/// speech.
Waveform TrimAndCompress(const Waveform &wave, const FrameLabels &labels,
                         const SilencePolicy &policy = {});

// ---------------------------------------------------------------------------

/// 10 * log10(sum(enhanced^2) / sum((noisy - enhanced)^2)), where the
/// residual stands in for the noise. Returns +inf for a zero residual and
/// -inf when the enhanced signal has zero energy (checked first).
double EstimateSnr(const Waveform &noisy, const Waveform &enhanced);

/// Scales so that max |sample| == target_peak. Throws kAllZero on silence.
Waveform NormalizeVolume(const Waveform &wave, double target_peak = 0.95);

}  // namespace ttskit

#endif  // TTSKIT_ENHANCE_H_
