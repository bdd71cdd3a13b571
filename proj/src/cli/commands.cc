// src/cli/commands.cc

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

// Small single-file subcommands: vad, snr, vocode, filter, report.

#include "commands.h"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "common.h"
#include "ttskit/error.h"
#include "ttskit/griffin_lim.h"

namespace ttskit::cli {

void WriteSpectrogramTsv(std::ostream &out, const FeatureSeq &spec) {
  for (size_t t = 0; t < spec.num_frames(); t++) {
    const auto row = spec.Row(t);
    for (size_t k = 0; k < row.size(); k++)
      out << (k ? "\t" : "") << FormatNumber(row[k]);
    out << '\n';
  }
}

FeatureSeq ReadSpectrogramTsv(std::istream &in, double frame_rate) {
  std::vector<std::vector<double>> rows;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) {
      try {
        size_t used = 0;
        row.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception &) {
        Fail(ErrorKind::kParse, "spectrogram line " + std::to_string(line_no) +
                                    ": bad value '" + field + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      Fail(ErrorKind::kParse,
           "spectrogram line " + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  return FeatureSeq::FromRows(rows, FeatureKind::kMagnitudeSpectrogram, frame_rate);
}

int RunVad(const GlobalOptions &global, const VadCommandOptions &opts,
           std::ostream &out) {
  const Waveform wave = LoadAudio(opts.wav, global.sample_rate);
  VadConfig cfg;
  cfg.aggressiveness = opts.level;
  cfg.energy_threshold_db = opts.threshold_db;
  const FrameLabels labels = VadLabel(wave, cfg);
  if (!opts.labels_out.empty()) {
    std::ofstream f(opts.labels_out, std::ios::trunc);
    if (!f) Fail(ErrorKind::kIo, "cannot write " + opts.labels_out);
    f << "frame_index\tspeech\n";
    for (size_t t = 0; t < labels.size(); t++)
      f << t << '\t' << (labels.speech[t] ? 1 : 0) << '\n';
  }
  out << "frames\t" << labels.size() << "\nspeech_frames\t"
      << labels.CountSpeech() << "\ninput_s\t" << FormatNumber(wave.duration_s())
      << '\n';
  if (!opts.trimmed_out.empty()) {
    SilencePolicy policy;
    policy.seed = global.seed;
    const Waveform trimmed = TrimAndCompress(wave, labels, policy);
    WriteWav(opts.trimmed_out, trimmed);
    out << "output_s\t" << FormatNumber(trimmed.duration_s()) << '\n';
  }
  return kExitOk;
}

int RunSnr(const GlobalOptions &global, const SnrCommandOptions &opts,
           std::ostream &out) {
  const Waveform noisy = LoadAudio(opts.noisy, global.sample_rate);
  const Waveform enhanced = LoadAudio(opts.enhanced, global.sample_rate);
  out << FormatNumber(EstimateSnr(noisy, enhanced)) << '\n';
  return kExitOk;
}

int RunVocode(const GlobalOptions &global, const VocodeCommandOptions &opts,
              std::ostream &out) {
  const StftConfig stft = global.Stft();
  GriffinLimOptions gl;
  gl.n_iters = opts.n_iters;
  gl.seed = global.seed;
  if (opts.random_phase) gl.init = PhaseInit::kRandom;

  FeatureSeq target;
  if (opts.roundtrip) {
    const Waveform wave = LoadAudio(opts.input, global.sample_rate);
    target = Stft(wave, stft);
    gl.num_samples = wave.size();
  } else {
    std::ifstream in(opts.input);
    if (!in) Fail(ErrorKind::kIo, "cannot open " + opts.input);
    target = ReadSpectrogramTsv(
        in, static_cast<double>(global.sample_rate) / stft.hop_length);
  }
  const Waveform wave = GriffinLim(target, stft, global.sample_rate, gl);
  if (!opts.output.empty()) WriteWav(opts.output, wave);
  if (!opts.spec_out.empty()) {
    std::ofstream f(opts.spec_out, std::ios::trunc);
    if (!f) Fail(ErrorKind::kIo, "cannot write " + opts.spec_out);
    WriteSpectrogramTsv(f, target);
  }
  out << "samples\t" << wave.size() << '\n';
  if (opts.roundtrip && !wave.empty())
    out << "spectral_convergence\t"
        << FormatNumber(SpectralConvergence(target, Stft(wave, stft))) << '\n';
  return kExitOk;
}

int RunFilter(const FilterCommandOptions &opts, std::ostream &out) {
  const Manifest input = LoadManifest(opts.manifest);
  const FilterResult result = ApplyFilter(input, opts.filter);
  SaveManifest(opts.kept_out, result.kept);
  if (!opts.dropped_out.empty()) {
    std::ofstream f(opts.dropped_out, std::ios::trunc);
    if (!f) Fail(ErrorKind::kIo, "cannot write " + opts.dropped_out);
    WriteDroppedReport(f, result.dropped);
  }
  out << "kept\t" << result.kept.size() << "\ndropped\t" << result.dropped.size()
      << "\nkept_hours\t" << FormatHours(Summarize(result.kept).hours)
      << "\ninput_hours\t" << FormatHours(Summarize(input).hours) << '\n';
  return kExitOk;
}

namespace {

nlohmann::ordered_json HistogramJson(const Histogram &h) {
  nlohmann::ordered_json j;
  j["edges"] = h.edges;
  j["counts"] = h.counts;
  j["absent"] = h.absent;
  return j;
}

void PrintHistogram(std::ostream &out, const char *name, const Histogram &h) {
  for (size_t k = 0; k < h.counts.size(); k++) {
    out << name << '\t';
    if (k == 0)
      out << "<" << FormatNumber(h.edges.front());
    else if (k == h.edges.size())
      out << ">=" << FormatNumber(h.edges.back());
    else
      out << "[" << FormatNumber(h.edges[k - 1]) << "," << FormatNumber(h.edges[k])
          << ")";
    out << '\t' << h.counts[k] << '\n';
  }
  out << name << "\tabsent\t" << h.absent << '\n';
}

}  // namespace

int RunReport(const ReportCommandOptions &opts, std::ostream &out) {
  const Manifest manifest = LoadManifest(opts.manifest);
  const CorpusStats stats = Summarize(manifest);
  out << "hours\t" << FormatHours(stats.hours) << "\nutterances\t"
      << stats.num_utterances << '\n';
  for (const auto &[speaker, n] : stats.per_speaker)
    out << "speaker\t" << speaker << '\t' << n << '\n';
  if (stats.num_without_speaker > 0)
    out << "speaker\t(none)\t" << stats.num_without_speaker << '\n';
  PrintHistogram(out, "snr_db", stats.snr_db);
  PrintHistogram(out, "cer", stats.cer);
  if (!opts.json_out.empty()) {
    nlohmann::ordered_json j;
    j["hours"] = stats.hours;
    j["utterances"] = stats.num_utterances;
    j["per_speaker"] = stats.per_speaker;
    j["without_speaker"] = stats.num_without_speaker;
    j["snr_db"] = HistogramJson(stats.snr_db);
    j["cer"] = HistogramJson(stats.cer);
    std::ofstream f(opts.json_out, std::ios::trunc);
    if (!f) Fail(ErrorKind::kIo, "cannot write " + opts.json_out);
    f << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace ttskit::cli
