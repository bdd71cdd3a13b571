// include/ttskit/cli.h

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

#ifndef TTSKIT_CLI_H_
#define TTSKIT_CLI_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttskit/corpus.h"
#include "ttskit/enhance.h"
#include "ttskit/feature_seq.h"
#include "ttskit/mel.h"
#include "ttskit/pitch.h"
#include "ttskit/stft.h"

namespace ttskit::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Raised for bad flags or arguments; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  int workers = 1;
  uint64_t seed = 0;
  int sample_rate = 22050;
  int fft_size = 1024;
  int win_length = 1024;
  int hop_length = 256;

  StftConfig Stft() const;
  MelConfig Mel() const;
  PitchConfig Pitch() const;
};

// ---------------------------------------------------------------------------
// preprocess

enum class StageKind { kDenoise, kVad, kFilter, kVolumeNorm };

struct Stage {
  StageKind kind;
  /// Aggressiveness for kVad.
  int vad_level = 0;
  /// Shorthand as written on the command line: DN, VAD-n, FLT, VN.
  std::string name;
};

/// Parses "DN,VAD-3,FLT,VN". Throws UsageError on unknown or repeated stages
/// (VAD-n counts as one stage whatever its level).
std::vector<Stage> ParseStages(const std::string &list);

struct PreprocessOptions {
  std::string manifest;
  std::string out_dir;
  std::vector<Stage> stages;
  /// Directory holding `<name>.enhanced.wav` for input `<name>.wav`; empty
  /// selects the identity enhancer.
  std::string enhanced_dir;
  DryWetConfig dry_wet;
  FilterConfig filter;
  double vad_threshold_db = -45.0;
  SilenceFill silence_fill = SilenceFill::kZeros;
  double target_peak = 0.95;
};

/// Writes `<out_dir>/<id>.wav`, `manifest.tsv`, `dropped.tsv`, `errors.tsv`
/// and `stages.tsv`, and prints the retained-hours table.
int RunPreprocess(const GlobalOptions &global, const PreprocessOptions &opts,
                  std::ostream &out, std::ostream &log);

// ---------------------------------------------------------------------------
// metrics

struct MetricsOptions {
  std::string ref_manifest;
  std::string hyp_manifest;
  bool mcd = true;
  bool msd = true;
  bool f0 = true;
  bool cer = true;
  /// Writes `<prefix>.tsv` and `<prefix>.json`.
  std::string out_prefix;
  /// When set, per-utterance pitch tracks are dumped here.
  std::string pitch_dir;
};

/// Parses "mcd,msd,f0,cer" into opts. Throws UsageError.
void ParseMetricSet(const std::string &list, MetricsOptions *opts);

int RunMetrics(const GlobalOptions &global, const MetricsOptions &opts,
               std::ostream &out, std::ostream &log);

// ---------------------------------------------------------------------------
// Spectrogram text format used by `vocode`: one frame per line, bins
// tab-separated, shortest round-trip decimals.

void WriteSpectrogramTsv(std::ostream &out, const FeatureSeq &spec);
FeatureSeq ReadSpectrogramTsv(std::istream &in, double frame_rate);

/// Entry point of the `ttskit` binary.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &log);

}  // namespace ttskit::cli

#endif  // TTSKIT_CLI_H_
