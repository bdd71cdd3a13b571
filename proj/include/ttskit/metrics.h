// include/ttskit/metrics.h

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

#ifndef TTSKIT_METRICS_H_
#define TTSKIT_METRICS_H_

#include <optional>
#include <string>
#include <string_view>

#include "ttskit/feature_seq.h"
#include "ttskit/mel.h"
#include "ttskit/pitch.h"
#include "ttskit/waveform.h"

namespace ttskit {

// ---------------------------------------------------------------------------
// F0 metrics. Pitch deviation is judged against the reference pitch with a
// strict inequality: |p - p_hat| > 0.2 * p.

/// Raw frame counts behind GPE/VDE/FFE, so callers can reason about exact
/// rationals before division.
struct F0ErrorCounts {
  size_t num_frames = 0;
  /// Frames voiced in both tracks.
  size_t num_covoiced = 0;
  /// Co-voiced frames with gross pitch error.
  size_t num_gross_errors = 0;
  /// Frames whose voicing decisions disagree.
  size_t num_voicing_errors = 0;
};

/// Tracks must have equal length (see AlignTracks).
F0ErrorCounts CountF0Errors(const PitchTrack &ref, const PitchTrack &hyp);

/// Gross pitch error over co-voiced frames. Throws kNoCovoicedFrames when no
/// frame is voiced in both tracks.
double Gpe(const PitchTrack &ref, const PitchTrack &hyp);
/// Fraction of all T frames with a voicing disagreement.
double Vde(const PitchTrack &ref, const PitchTrack &hyp);
/// VDE plus gross pitch errors counted over all T frames.
double Ffe(const PitchTrack &ref, const PitchTrack &hyp);

struct F0MetricReport {
  /// Absent when there are no co-voiced frames; never reported as 0.
  std::optional<double> gpe;
  double vde = 0.0;
  double ffe = 0.0;
  size_t n_frames = 0;
  size_t n_covoiced = 0;
};

F0MetricReport ComputeF0Metrics(const PitchTrack &ref, const PitchTrack &hyp);

// ---------------------------------------------------------------------------
// MCD / MSD: per-dimension RMSE of frame differences along the DTW path,
// sqrt(mean over path of ||a_i - b_j||^2 / D). No 10*sqrt(2)/ln(10) factor.

struct DistortionReport {
  double value = 0.0;
  size_t path_length = 0;
};

/// Frame-level entry point: DTW on Euclidean distance, then RMSE along the
/// path. Works for any pair of equal-dimension feature sequences.
DistortionReport FeatureDistortion(const FeatureSeq &ref, const FeatureSeq &hyp);

/// MCD on 13-dim MFCCs (c1..c13) of both waveforms.
DistortionReport Mcd(const Waveform &ref, const Waveform &hyp,
                     const MelConfig &cfg = {});
/// MSD on n_mels-dim log-mel features of both waveforms.
DistortionReport Msd(const Waveform &ref, const Waveform &hyp,
                     const MelConfig &cfg = {});

// ---------------------------------------------------------------------------
// CER

struct TextNorm {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool collapse_whitespace = true;
};

/// NFC-normalizes UTF-8 text, then applies the enabled steps. Collapsing also
/// trims leading and trailing whitespace. Idempotent.
std::u32string NormalizeText(std::string_view utf8, const TextNorm &norm = {});

struct EditCounts {
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  size_t distance() const { return substitutions + deletions + insertions; }
};

/// Unit-cost Levenshtein alignment of reference against hypothesis. S/D/I
/// come from one optimal alignment; ties in the backtrace prefer
/// substitution (or match), then insertion, then deletion.
EditCounts AlignEdits(std::u32string_view reference,
                      std::u32string_view hypothesis);

struct CerReport {
  double cer = 0.0;
  double substitutions = 0.0;
  double deletions = 0.0;
  double insertions = 0.0;
  size_t n_ref_chars = 0;
  EditCounts counts;
};

/// All fractions are normalized by the normalized reference length. Throws
/// kEmptyReference when the reference is empty after normalization.
CerReport Cer(std::string_view reference, std::string_view hypothesis,
              const TextNorm &norm = {});

/// "x.x (s/d/i)" in percent, one decimal each.
std::string FormatCerPercent(double cer, double substitutions, double deletions,
                             double insertions);

}  // namespace ttskit

#endif  // TTSKIT_METRICS_H_
