// src/cli/preprocess.cc

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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "common.h"
#include "ttskit/cli.h"
#include "ttskit/error.h"
#include "ttskit/metrics.h"
#include "ttskit/parallel.h"

namespace ttskit::cli {

namespace fs = std::filesystem;

StftConfig GlobalOptions::Stft() const {
  StftConfig cfg;
  cfg.fft_size = fft_size;
  cfg.win_length = win_length;
  cfg.hop_length = hop_length;
  return cfg;
}

MelConfig GlobalOptions::Mel() const {
  MelConfig cfg;
  cfg.stft = Stft();
  return cfg;
}

PitchConfig GlobalOptions::Pitch() const {
  PitchConfig cfg;
  cfg.frame_length = win_length;
  cfg.hop_length = hop_length;
  return cfg;
}

std::vector<Stage> ParseStages(const std::string &list) {
  std::vector<Stage> stages;
  std::set<StageKind> seen;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    Stage stage;
    stage.name = name;
    if (name == "DN") {
      stage.kind = StageKind::kDenoise;
    } else if (name == "FLT") {
      stage.kind = StageKind::kFilter;
    } else if (name == "VN") {
      stage.kind = StageKind::kVolumeNorm;
    } else if (name.size() == 5 && name.rfind("VAD-", 0) == 0 &&
               name[4] >= '0' && name[4] <= '3') {
      stage.kind = StageKind::kVad;
      stage.vad_level = name[4] - '0';
    } else {
      throw UsageError("unknown stage '" + name +
                       "' (expected DN, VAD-0..VAD-3, FLT, VN)");
    }
    if (!seen.insert(stage.kind).second)
      throw UsageError("stage '" + name + "' appears more than once");
    stages.push_back(stage);
  }
  if (stages.empty()) throw UsageError("no stages given");
  return stages;
}

namespace {

struct UtteranceOutcome {
  /// Duration after each stage; shorter than the stage list when the
  /// utterance was dropped or failed part way.
  std::vector<double> durations;
  std::optional<UtteranceRecord> kept;
  std::optional<DroppedRecord> dropped;
  std::optional<std::string> error_stage;
  std::string error_message;
  std::vector<std::string> warnings;
};

std::string EnhancedPath(const std::string &enhanced_dir,
                         const std::string &audio_path) {
  return (fs::path(enhanced_dir) /
          (fs::path(audio_path).stem().string() + ".enhanced.wav"))
      .string();
}

UtteranceOutcome ProcessUtterance(const GlobalOptions &global,
                                  const PreprocessOptions &opts,
                                  const UtteranceRecord &input) {
  UtteranceOutcome outcome;
  UtteranceRecord record = input;
  std::string stage_name = "load";
  try {
    const std::string audio_path = ResolveAudioPath(opts.manifest, input.audio_path);
    Waveform wave = LoadAudio(audio_path, global.sample_rate);
    for (const Stage &stage : opts.stages) {
      stage_name = stage.name;
      switch (stage.kind) {
        case StageKind::kDenoise: {
          Waveform enhanced =
              opts.enhanced_dir.empty()
                  ? IdentityEnhance(wave)
                  : LoadAudio(EnhancedPath(opts.enhanced_dir, audio_path),
                              global.sample_rate);
          record.snr_db = EstimateSnr(wave, enhanced);
          MixResult mix = DryWetMix(wave, enhanced, opts.dry_wet);
          if (mix.num_clipped > 0)
            outcome.warnings.push_back(input.id + ": clipped " +
                                       std::to_string(mix.num_clipped) +
                                       " samples after dry/wet mix");
          wave = std::move(mix.wave);
          break;
        }
        case StageKind::kVad: {
          VadConfig vad;
          vad.aggressiveness = stage.vad_level;
          vad.energy_threshold_db = opts.vad_threshold_db;
          SilencePolicy policy;
          policy.fill = opts.silence_fill;
          policy.seed = global.seed ^ Fnv1a(input.id);
          try {
            wave = TrimAndCompress(wave, VadLabel(wave, vad), policy);
          } catch (const Error &e) {
            if (e.kind() != ErrorKind::kAllSilence) throw;
            outcome.dropped = DroppedRecord{record, "all-silence"};
            return outcome;
          }
          break;
        }
        case StageKind::kFilter: {
          if (!record.cer && record.hyp_text)
            record.cer = Cer(record.text, *record.hyp_text).cer;
          if (auto reason = FilterVerdict(record, opts.filter)) {
            outcome.dropped = DroppedRecord{record, *reason};
            return outcome;
          }
          break;
        }
        case StageKind::kVolumeNorm: {
          try {
            wave = NormalizeVolume(wave, opts.target_peak);
          } catch (const Error &e) {
            if (e.kind() != ErrorKind::kAllZero) throw;
            outcome.dropped = DroppedRecord{record, "all-zero"};
            return outcome;
          }
          break;
        }
      }
      outcome.durations.push_back(wave.duration_s());
    }
    stage_name = "write";
    const std::string file = FileStem(input.id) + ".wav";
    WriteWav((fs::path(opts.out_dir) / file).string(), wave);
    record.audio_path = file;
    record.duration_s = wave.duration_s();
    outcome.kept = std::move(record);
  } catch (const std::exception &e) {
    outcome.error_stage = stage_name;
    outcome.error_message = e.what();
  }
  return outcome;
}

void WriteErrors(const std::string &path,
                 const std::vector<std::pair<std::string, const UtteranceOutcome *>> &errors) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) Fail(ErrorKind::kIo, "cannot write " + path);
  out << "id\tstage\tmessage\n";
  for (const auto &[id, outcome] : errors) {
    std::string message = outcome->error_message;
    for (char &c : message)
      if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    out << id << '\t' << *outcome->error_stage << '\t' << message << '\n';
  }
}

}  // namespace

int RunPreprocess(const GlobalOptions &global, const PreprocessOptions &opts,
                  std::ostream &out, std::ostream &log) {
  Manifest input;
  try {
    input = LoadManifest(opts.manifest);
    fs::create_directories(opts.out_dir);
  } catch (const std::exception &e) {
    log << "ERROR: " << e.what() << '\n';
    return kExitRuntime;
  }

  const auto outcomes = ParallelMap(input.size(), global.workers, [&](size_t i) {
    return ProcessUtterance(global, opts, input.records[i]);
  });

  Manifest kept;
  std::vector<DroppedRecord> dropped;
  std::vector<std::pair<std::string, const UtteranceOutcome *>> errors;
  std::vector<double> stage_seconds(opts.stages.size(), 0.0);
  std::vector<size_t> stage_counts(opts.stages.size(), 0);
  double raw_seconds = 0.0;
  for (size_t i = 0; i < input.size(); i++) {
    const UtteranceOutcome &o = outcomes[i];
    raw_seconds += input.records[i].duration_s;
    for (size_t s = 0; s < o.durations.size(); s++) {
      stage_seconds[s] += o.durations[s];
      stage_counts[s]++;
    }
    for (const auto &w : o.warnings) LogWarning(log, w);
    if (o.kept) kept.records.push_back(*o.kept);
    if (o.dropped) dropped.push_back(*o.dropped);
    if (o.error_stage) {
      LogWarning(log, input.records[i].id + ": " + *o.error_stage + ": " +
                          o.error_message);
      errors.emplace_back(input.records[i].id, &o);
    }
  }

  std::string tag;
  for (const Stage &s : opts.stages) tag += (tag.empty() ? "" : "+") + s.name;
  kept.source_tag = tag;

  std::ostringstream table;
  table << "stage\thours\tutterances\n";
  table << "Raw\t" << FormatHours(raw_seconds / 3600.0) << '\t' << input.size()
        << '\n';
  std::string cumulative;
  for (size_t s = 0; s < opts.stages.size(); s++) {
    cumulative += (cumulative.empty() ? "" : "+") + opts.stages[s].name;
    table << cumulative << '\t' << FormatHours(stage_seconds[s] / 3600.0) << '\t'
          << stage_counts[s] << '\n';
  }

  try {
    const fs::path dir(opts.out_dir);
    SaveManifest((dir / "manifest.tsv").string(), kept);
    {
      std::ofstream f(dir / "dropped.tsv", std::ios::trunc);
      if (!f) Fail(ErrorKind::kIo, "cannot write dropped.tsv");
      WriteDroppedReport(f, dropped);
    }
    WriteErrors((dir / "errors.tsv").string(), errors);
    std::ofstream f(dir / "stages.tsv", std::ios::trunc);
    if (!f) Fail(ErrorKind::kIo, "cannot write stages.tsv");
    f << table.str();
  } catch (const std::exception &e) {
    log << "ERROR: " << e.what() << '\n';
    return kExitRuntime;
  }

  out << table.str();
  out << "kept " << kept.size() << ", dropped " << dropped.size() << ", failed "
      << errors.size() << " of " << input.size() << " utterances\n";
  return kExitOk;
}

}  // namespace ttskit::cli
