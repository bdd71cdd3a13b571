// include/ttskit/griffin_lim.h

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

#ifndef TTSKIT_GRIFFIN_LIM_H_
#define TTSKIT_GRIFFIN_LIM_H_

#include <cstdint>
#include <optional>

#include "ttskit/feature_seq.h"
#include "ttskit/stft.h"
#include "ttskit/waveform.h"

namespace ttskit {

enum class PhaseInit {
  /// Random phase per spectral peak, advanced from frame to frame at the
  /// peak's frequency; bins in a peak's lobe share its phase.
  kPhaseLocked,
  /// Independent uniform random phase for every bin of every frame.
  kRandom,
};

struct GriffinLimOptions {
  int n_iters = 32;
  /// Seeds the random initial phase.
  uint64_t seed = 0;
  PhaseInit init = PhaseInit::kPhaseLocked;
  /// Output length; defaults to hop * (T - 1).
  std::optional<size_t> num_samples;
};

/// Phase reconstruction by alternating projection between the set of signals
/// with the target magnitude and the set of consistent STFTs.
Waveform GriffinLim(const FeatureSeq &magnitude, const StftConfig &cfg,
                    int sample_rate, const GriffinLimOptions &opts = {});

/// ||est - target||_F / ||target||_F over the frames both share. Zero when
/// both are all-zero, +inf when only the target is.
double SpectralConvergence(const FeatureSeq &target, const FeatureSeq &estimate);

}  // namespace ttskit

#endif  // TTSKIT_GRIFFIN_LIM_H_
