// include/ttskit/waveform.h

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

#ifndef TTSKIT_WAVEFORM_H_
#define TTSKIT_WAVEFORM_H_

#include <span>
#include <string>
#include <vector>

namespace ttskit {

/// Mono signal with its sample rate. Samples are nominally in [-1, 1] but
/// out-of-range float input is representable (volume normalization handles
/// it). Construction validates that the rate is positive and every sample is
/// finite.
class Waveform {
 public:
  Waveform() = default;
  Waveform(std::vector<double> samples, int sample_rate);

  std::span<const double> samples() const { return samples_; }
  int sample_rate() const { return sample_rate_; }
  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration_s() const {
    return sample_rate_ > 0 ? static_cast<double>(samples_.size()) / sample_rate_
                            : 0.0;
  }

  /// Largest absolute sample value; 0 for an empty signal.
  double Peak() const;

  bool operator==(const Waveform &other) const = default;

 private:
  std::vector<double> samples_;
  int sample_rate_ = 0;
};

/// Reads a mono RIFF/WAVE file holding 16-bit integer or 32-bit float PCM.
/// Multi-channel files are rejected; downmix upstream.
Waveform ReadWav(const std::string &path);

/// Writes 16-bit PCM. Samples outside [-1, 1] are clipped.
void WriteWav(const std::string &path, const Waveform &wave);

}  // namespace ttskit

#endif  // TTSKIT_WAVEFORM_H_
