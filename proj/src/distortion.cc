// src/distortion.cc

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

#include <cmath>

#include "ttskit/dtw.h"
#include "ttskit/error.h"
#include "ttskit/metrics.h"

namespace ttskit {

DistortionReport FeatureDistortion(const FeatureSeq &ref, const FeatureSeq &hyp) {
  const DtwAlignment alignment = DtwAlign(ref, hyp);
  const double dim = static_cast<double>(ref.dim());
  double acc = 0.0;
  for (const auto &[i, j] : alignment.path) {
    const auto a = ref.Row(i), b = hyp.Row(j);
    double sq = 0.0;
    for (size_t d = 0; d < a.size(); d++) sq += (a[d] - b[d]) * (a[d] - b[d]);
    acc += sq / dim;
  }
  DistortionReport report;
  report.path_length = alignment.path.size();
  report.value = std::sqrt(acc / report.path_length);
  return report;
}

namespace {

void CheckPair(const Waveform &ref, const Waveform &hyp) {
  if (ref.empty() || hyp.empty())
    Fail(ErrorKind::kEmptySignal, "distortion needs two non-empty signals");
  if (ref.sample_rate() != hyp.sample_rate())
    Fail(ErrorKind::kRateMismatch, "reference and hypothesis sample rates differ");
}

}  // namespace

DistortionReport Mcd(const Waveform &ref, const Waveform &hyp,
                     const MelConfig &cfg) {
  CheckPair(ref, hyp);
  return FeatureDistortion(Mfcc(ref, cfg), Mfcc(hyp, cfg));
}

DistortionReport Msd(const Waveform &ref, const Waveform &hyp,
                     const MelConfig &cfg) {
  CheckPair(ref, hyp);
  return FeatureDistortion(LogMel(ref, cfg), LogMel(hyp, cfg));
}

}  // namespace ttskit
