// src/f0_metrics.cc

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
#include <string>

#include "ttskit/error.h"
#include "ttskit/metrics.h"

namespace ttskit {

namespace {

bool GrossPitchError(double ref_f0, double hyp_f0) {
  return std::abs(ref_f0 - hyp_f0) > 0.2 * ref_f0;
}

}  // namespace

F0ErrorCounts CountF0Errors(const PitchTrack &ref, const PitchTrack &hyp) {
  if (ref.size() != hyp.size() || ref.f0.size() != ref.voiced.size() ||
      hyp.f0.size() != hyp.voiced.size())
    Fail(ErrorKind::kLengthMismatch,
         "pitch tracks have " + std::to_string(ref.size()) + " and " +
             std::to_string(hyp.size()) + " frames; align them first");
  F0ErrorCounts c;
  c.num_frames = ref.size();
  for (size_t t = 0; t < ref.size(); t++) {
    if (ref.voiced[t] != hyp.voiced[t]) c.num_voicing_errors++;
    if (ref.voiced[t] && hyp.voiced[t]) {
      c.num_covoiced++;
      if (GrossPitchError(ref.f0[t], hyp.f0[t])) c.num_gross_errors++;
    }
  }
  return c;
}

double Gpe(const PitchTrack &ref, const PitchTrack &hyp) {
  const F0ErrorCounts c = CountF0Errors(ref, hyp);
  if (c.num_covoiced == 0)
    Fail(ErrorKind::kNoCovoicedFrames, "GPE undefined: no co-voiced frames");
  return static_cast<double>(c.num_gross_errors) / c.num_covoiced;
}

double Vde(const PitchTrack &ref, const PitchTrack &hyp) {
  const F0ErrorCounts c = CountF0Errors(ref, hyp);
  if (c.num_frames == 0) Fail(ErrorKind::kEmptyTrack, "VDE of empty tracks");
  return static_cast<double>(c.num_voicing_errors) / c.num_frames;
}

double Ffe(const PitchTrack &ref, const PitchTrack &hyp) {
  const F0ErrorCounts c = CountF0Errors(ref, hyp);
  if (c.num_frames == 0) Fail(ErrorKind::kEmptyTrack, "FFE of empty tracks");
  const double frames = static_cast<double>(c.num_frames);
  return c.num_voicing_errors / frames + c.num_gross_errors / frames;
}

F0MetricReport ComputeF0Metrics(const PitchTrack &ref, const PitchTrack &hyp) {
  const F0ErrorCounts c = CountF0Errors(ref, hyp);
  if (c.num_frames == 0) Fail(ErrorKind::kEmptyTrack, "F0 metrics of empty tracks");
  const double frames = static_cast<double>(c.num_frames);
  F0MetricReport r;
  r.n_frames = c.num_frames;
  r.n_covoiced = c.num_covoiced;
  if (c.num_covoiced > 0)
    r.gpe = static_cast<double>(c.num_gross_errors) / c.num_covoiced;
  r.vde = c.num_voicing_errors / frames;
  r.ffe = r.vde + c.num_gross_errors / frames;
  return r;
}

}  // namespace ttskit
