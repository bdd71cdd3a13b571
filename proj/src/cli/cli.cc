// src/cli/cli.cc

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

#include <CLI11.hpp>

#include "commands.h"
#include "ttskit/cli.h"
#include "ttskit/error.h"
#include "ttskit/parallel.h"

namespace ttskit::cli {

namespace {

FilterMode ParseFilterMode(const std::string &mode) {
  if (mode == "snr+cer") return FilterMode::kSnrAndCer;
  if (mode == "cer") return FilterMode::kCerOnly;
  throw UsageError("--flt must be 'snr+cer' or 'cer', got '" + mode + "'");
}

void AddFilterFlags(CLI::App *cmd, FilterConfig *cfg, std::string *mode) {
  cmd->add_option("--flt", *mode, "Outlier filter mode: snr+cer or cer")
      ->capture_default_str();
  cmd->add_option("--min-snr", cfg->min_snr_db, "Keep only SNR above this (dB)")
      ->capture_default_str();
  cmd->add_option("--max-cer", cfg->max_cer, "Keep only CER below this")
      ->capture_default_str();
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &log) {
  CLI::App app{"ttskit: speech synthesis evaluation and data curation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  global.workers = DefaultWorkers();
  app.add_option("--workers", global.workers, "Parallel workers (default: CPUs)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for random phase and comfort noise")
      ->capture_default_str();
  app.add_option("--sample-rate", global.sample_rate, "Processing sample rate (Hz)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--fft", global.fft_size, "FFT size")->capture_default_str();
  app.add_option("--win", global.win_length, "Window length")->capture_default_str();
  app.add_option("--hop", global.hop_length, "Hop length")->capture_default_str();

  // preprocess
  PreprocessOptions pre;
  std::string stages, pre_flt = "snr+cer", fill = "zeros";
  auto *pre_cmd = app.add_subcommand("preprocess", "Run a DN/VAD-n/FLT/VN pipeline");
  pre_cmd->add_option("--manifest", pre.manifest, "Input manifest TSV")->required();
  pre_cmd->add_option("--out-dir", pre.out_dir, "Output directory")->required();
  pre_cmd->add_option("--stages", stages, "Comma-separated, e.g. DN,VAD-3,FLT,VN")
      ->required();
  pre_cmd->add_option("--enhanced-dir", pre.enhanced_dir,
                      "Directory with <name>.enhanced.wav files (default: identity)");
  pre_cmd->add_option("--dry", pre.dry_wet.dry, "Dry/wet mix weight of the noisy input")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  pre_cmd->add_option("--vad-threshold-db", pre.vad_threshold_db,
                      "Frame energy threshold in dBFS")
      ->capture_default_str();
  pre_cmd->add_option("--silence-fill", fill, "zeros or comfort-noise")
      ->capture_default_str();
  pre_cmd->add_option("--target-peak", pre.target_peak, "VN peak level")
      ->capture_default_str();
  AddFilterFlags(pre_cmd, &pre.filter, &pre_flt);

  // metrics
  MetricsOptions met;
  std::string which = "mcd,msd,f0,cer";
  auto *met_cmd = app.add_subcommand("metrics", "Score hypothesis audio/text against references");
  met_cmd->add_option("--ref", met.ref_manifest, "Reference manifest")->required();
  met_cmd->add_option("--hyp", met.hyp_manifest, "Hypothesis manifest")->required();
  met_cmd->add_option("--which", which, "Subset of mcd,msd,f0,cer")->capture_default_str();
  met_cmd->add_option("--out", met.out_prefix, "Write <out>.tsv and <out>.json");
  met_cmd->add_option("--pitch-dir", met.pitch_dir, "Dump pitch tracks here");

  // vad
  VadCommandOptions vad;
  auto *vad_cmd = app.add_subcommand("vad", "Label speech frames of one file");
  vad_cmd->add_option("wav", vad.wav, "Input WAV")->required();
  vad_cmd->add_option("--level", vad.level, "Aggressiveness 0..3")
      ->capture_default_str()
      ->check(CLI::Range(0, 3));
  vad_cmd->add_option("--threshold-db", vad.threshold_db, "Energy threshold (dBFS)")
      ->capture_default_str();
  vad_cmd->add_option("--labels", vad.labels_out, "Write per-frame labels TSV");
  vad_cmd->add_option("--trimmed", vad.trimmed_out,
                      "Write silence-trimmed/compressed WAV");

  // snr
  SnrCommandOptions snr;
  auto *snr_cmd = app.add_subcommand("snr", "Estimate SNR from noisy and enhanced audio");
  snr_cmd->add_option("noisy", snr.noisy, "Noisy WAV")->required();
  snr_cmd->add_option("enhanced", snr.enhanced, "Enhanced WAV")->required();

  // vocode
  VocodeCommandOptions voc;
  auto *voc_cmd = app.add_subcommand("vocode", "Griffin-Lim reconstruction");
  voc_cmd->add_option("input", voc.input,
                      "Magnitude spectrogram TSV, or WAV with --roundtrip")
      ->required();
  voc_cmd->add_option("--out", voc.output, "Output WAV");
  voc_cmd->add_option("--spec-out", voc.spec_out, "Write the target spectrogram TSV");
  voc_cmd->add_flag("--roundtrip", voc.roundtrip,
                    "STFT the input WAV, reconstruct, report spectral error");
  voc_cmd->add_flag("--random-phase", voc.random_phase,
                    "Start from independent random phase per bin");
  voc_cmd->add_option("--n-iters", voc.n_iters, "Griffin-Lim iterations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // filter
  FilterCommandOptions flt;
  std::string flt_mode = "snr+cer";
  auto *flt_cmd = app.add_subcommand("filter", "Apply the SNR/CER outlier filter");
  flt_cmd->add_option("--manifest", flt.manifest, "Input manifest")->required();
  flt_cmd->add_option("--kept", flt.kept_out, "Output manifest of kept rows")->required();
  flt_cmd->add_option("--dropped", flt.dropped_out, "Dropped rows with reasons");
  AddFilterFlags(flt_cmd, &flt.filter, &flt_mode);

  // report
  ReportCommandOptions rep;
  auto *rep_cmd = app.add_subcommand("report", "Corpus statistics for a manifest");
  rep_cmd->add_option("--manifest", rep.manifest, "Input manifest")->required();
  rep_cmd->add_option("--json", rep.json_out, "Also write JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    std::ostringstream help, err;
    const int code = app.exit(e, help, err);
    out << help.str();
    log << err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    try {
      if (global.fft_size <= 0 || global.win_length <= 0 || global.hop_length <= 0)
        throw UsageError("--fft, --win and --hop must be positive");
      if (pre_cmd->parsed()) {
        pre.stages = ParseStages(stages);
        pre.filter.mode = ParseFilterMode(pre_flt);
        if (fill == "zeros") pre.silence_fill = SilenceFill::kZeros;
        else if (fill == "comfort-noise") pre.silence_fill = SilenceFill::kComfortNoise;
        else throw UsageError("--silence-fill must be zeros or comfort-noise");
        return RunPreprocess(global, pre, out, log);
      }
      if (met_cmd->parsed()) {
        ParseMetricSet(which, &met);
        return RunMetrics(global, met, out, log);
      }
      if (flt_cmd->parsed()) {
        flt.filter.mode = ParseFilterMode(flt_mode);
        return RunFilter(flt, out);
      }
    } catch (const UsageError &e) {
      log << "usage error: " << e.what() << "\n" << app.help();
      return kExitUsage;
    }
    if (vad_cmd->parsed()) return RunVad(global, vad, out);
    if (snr_cmd->parsed()) return RunSnr(global, snr, out);
    if (voc_cmd->parsed()) return RunVocode(global, voc, out);
    if (rep_cmd->parsed()) return RunReport(rep, out);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kInvalidConfig) {
      log << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    log << "ERROR: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception &e) {
    log << "ERROR: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace ttskit::cli
