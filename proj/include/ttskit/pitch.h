// include/ttskit/pitch.h

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

#ifndef TTSKIT_PITCH_H_
#define TTSKIT_PITCH_H_

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ttskit/waveform.h"

namespace ttskit {

struct PitchConfig {
  double f0_min = 50.0;
  double f0_max = 550.0;
  /// Framing matches StftConfig (centered, reflect-padded) so a pitch track
  /// lines up with the spectrogram of the same signal.
  int frame_length = 1024;
  int hop_length = 256;
  /// A frame is voiced when the cumulative-mean-normalized difference dips
  /// below this value.
  double voicing_threshold = 0.3;

  void Validate(int sample_rate) const;
};

/// Per-frame F0 in Hz (0 when unvoiced) and voicing decisions.
struct PitchTrack {
  std::vector<double> f0;
  std::vector<bool> voiced;
  double frame_rate = 0.0;

  size_t size() const { return f0.size(); }
  bool empty() const { return f0.empty(); }
  bool operator==(const PitchTrack &) const = default;
};

/// YIN: cumulative-mean-normalized difference function, absolute threshold,
/// parabolic refinement of the chosen lag.
PitchTrack ExtractPitch(const Waveform &wave, const PitchConfig &cfg = {});

struct AlignedTracks {
  PitchTrack ref;
  PitchTrack hyp;
  /// Set when the input lengths differed by more than 10% of the longer one.
  std::optional<std::string> warning;
};

/// Truncates both tracks to the shorter length.
AlignedTracks AlignTracks(const PitchTrack &ref, const PitchTrack &hyp);

/// TSV with header `frame_index\tf0_hz\tvoiced`.
void WritePitchTrackTsv(std::ostream &out, const PitchTrack &track);

}  // namespace ttskit

#endif  // TTSKIT_PITCH_H_
