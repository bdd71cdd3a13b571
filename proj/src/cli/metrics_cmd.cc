// src/cli/metrics_cmd.cc

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

#include <json.hpp>

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
using nlohmann::ordered_json;

void ParseMetricSet(const std::string &list, MetricsOptions *opts) {
  opts->mcd = opts->msd = opts->f0 = opts->cer = false;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "mcd") opts->mcd = true;
    else if (name == "msd") opts->msd = true;
    else if (name == "f0") opts->f0 = true;
    else if (name == "cer") opts->cer = true;
    else
      throw UsageError("unknown metric '" + name + "' (expected mcd, msd, f0, cer)");
  }
  if (!(opts->mcd || opts->msd || opts->f0 || opts->cer))
    throw UsageError("no metrics selected");
}

namespace {

// Column order of the per-utterance report.
enum Column { kMcd, kMsd, kGpe, kVde, kFfe, kCer, kSub, kDel, kIns, kNumColumns };
constexpr const char *kColumnNames[kNumColumns] = {"mcd", "msd", "gpe", "vde", "ffe",
                                                   "cer", "s",   "d",   "i"};

struct MetricIssue {
  std::string metric;
  std::string message;
};

struct UtteranceMetrics {
  std::optional<double> values[kNumColumns];
  std::vector<MetricIssue> errors;
  std::vector<std::string> warnings;
};

UtteranceMetrics Evaluate(const GlobalOptions &global, const MetricsOptions &opts,
                          const UtteranceRecord &ref, const UtteranceRecord &hyp) {
  UtteranceMetrics m;
  std::optional<Waveform> ref_wave, hyp_wave;
  auto audio = [&]() {
    if (!ref_wave) {
      ref_wave = LoadAudio(ResolveAudioPath(opts.ref_manifest, ref.audio_path),
                           global.sample_rate);
      hyp_wave = LoadAudio(ResolveAudioPath(opts.hyp_manifest, hyp.audio_path),
                           global.sample_rate);
    }
  };
  auto guarded = [&](const char *metric, auto &&body) {
    try {
      body();
    } catch (const std::exception &e) {
      m.errors.push_back({metric, e.what()});
    }
  };

  if (opts.mcd)
    guarded("mcd", [&] {
      audio();
      m.values[kMcd] = Mcd(*ref_wave, *hyp_wave, global.Mel()).value;
    });
  if (opts.msd)
    guarded("msd", [&] {
      audio();
      m.values[kMsd] = Msd(*ref_wave, *hyp_wave, global.Mel()).value;
    });
  if (opts.f0)
    guarded("f0", [&] {
      audio();
      const PitchConfig pcfg = global.Pitch();
      const PitchTrack ref_track = ExtractPitch(*ref_wave, pcfg);
      const PitchTrack hyp_track = ExtractPitch(*hyp_wave, pcfg);
      if (!opts.pitch_dir.empty()) {
        for (const auto &[suffix, track] :
             {std::pair{".ref.f0.tsv", &ref_track}, std::pair{".hyp.f0.tsv", &hyp_track}}) {
          std::ofstream f(fs::path(opts.pitch_dir) / (FileStem(ref.id) + suffix),
                          std::ios::trunc);
          WritePitchTrackTsv(f, *track);
        }
      }
      AlignedTracks aligned = AlignTracks(ref_track, hyp_track);
      if (aligned.warning) m.warnings.push_back(ref.id + ": " + *aligned.warning);
      const F0MetricReport r = ComputeF0Metrics(aligned.ref, aligned.hyp);
      m.values[kGpe] = r.gpe;
      m.values[kVde] = r.vde;
      m.values[kFfe] = r.ffe;
      if (!r.gpe) m.errors.push_back({"gpe", "no co-voiced frames; GPE undefined"});
    });
  if (opts.cer)
    guarded("cer", [&] {
      if (!hyp.hyp_text) Fail(ErrorKind::kParse, "hyp_text missing in hypothesis manifest");
      const CerReport r = Cer(ref.text, *hyp.hyp_text);
      m.values[kCer] = r.cer;
      m.values[kSub] = r.substitutions;
      m.values[kDel] = r.deletions;
      m.values[kIns] = r.insertions;
    });
  return m;
}

ordered_json JsonValue(const std::optional<double> &v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
  return *v;
}

}  // namespace

int RunMetrics(const GlobalOptions &global, const MetricsOptions &opts,
               std::ostream &out, std::ostream &log) {
  Manifest ref, hyp;
  try {
    ref = LoadManifest(opts.ref_manifest);
    hyp = LoadManifest(opts.hyp_manifest);
  } catch (const std::exception &e) {
    log << "ERROR: " << e.what() << '\n';
    return kExitRuntime;
  }

  std::vector<std::string> only_ref, only_hyp;
  {
    std::set<std::string> ref_ids, hyp_ids;
    for (const auto &r : ref.records) ref_ids.insert(r.id);
    for (const auto &r : hyp.records) hyp_ids.insert(r.id);
    for (const auto &id : ref_ids)
      if (!hyp_ids.count(id)) only_ref.push_back(id);
    for (const auto &id : hyp_ids)
      if (!ref_ids.count(id)) only_hyp.push_back(id);
  }
  if (!only_ref.empty() || !only_hyp.empty()) {
    auto join = [](const std::vector<std::string> &ids) {
      std::string s;
      for (const auto &id : ids) s += (s.empty() ? "" : " ") + id;
      return s.empty() ? std::string("(none)") : s;
    };
    log << "ERROR: reference and hypothesis ids differ; only in reference: "
        << join(only_ref) << "; only in hypothesis: " << join(only_hyp) << '\n';
    return kExitUsage;
  }
  if (!opts.pitch_dir.empty()) fs::create_directories(opts.pitch_dir);

  // Both manifests are sorted by id, so records pair up by index.
  const auto results = ParallelMap(ref.size(), global.workers, [&](size_t i) {
    return Evaluate(global, opts, ref.records[i], hyp.records[i]);
  });

  double sums[kNumColumns] = {};
  size_t counts[kNumColumns] = {};
  std::ostringstream tsv;
  tsv << "id";
  for (const char *name : kColumnNames) tsv << '\t' << name;
  tsv << '\n';
  ordered_json rows = ordered_json::array(), errors = ordered_json::array(),
               warnings = ordered_json::array();
  for (size_t i = 0; i < results.size(); i++) {
    const std::string &id = ref.records[i].id;
    const UtteranceMetrics &m = results[i];
    ordered_json row;
    row["id"] = id;
    tsv << id;
    for (int c = 0; c < kNumColumns; c++) {
      tsv << '\t' << FormatOptional(m.values[c]);
      row[kColumnNames[c]] = JsonValue(m.values[c]);
      if (m.values[c]) {
        sums[c] += *m.values[c];
        counts[c]++;
      }
    }
    tsv << '\n';
    rows.push_back(row);
    for (const auto &e : m.errors) {
      errors.push_back({{"id", id}, {"metric", e.metric}, {"message", e.message}});
      log << "WARNING: " << id << ": " << e.metric << ": " << e.message << '\n';
    }
    for (const auto &w : m.warnings) {
      warnings.push_back(w);
      LogWarning(log, w);
    }
  }

  std::optional<double> means[kNumColumns];
  ordered_json summary;
  tsv << "mean";
  for (int c = 0; c < kNumColumns; c++) {
    if (counts[c] > 0) means[c] = sums[c] / counts[c];
    tsv << '\t' << FormatOptional(means[c]);
    summary[kColumnNames[c]] = JsonValue(means[c]);
  }
  tsv << '\n';
  ordered_json counts_json;
  for (int c = 0; c < kNumColumns; c++) counts_json[kColumnNames[c]] = counts[c];
  summary["n"] = counts_json;

  ordered_json report;
  report["utterances"] = rows;
  report["summary"] = summary;
  report["errors"] = errors;
  report["warnings"] = warnings;

  try {
    if (!opts.out_prefix.empty()) {
      const fs::path parent = fs::path(opts.out_prefix).parent_path();
      if (!parent.empty()) fs::create_directories(parent);
      std::ofstream t(opts.out_prefix + ".tsv", std::ios::trunc);
      std::ofstream j(opts.out_prefix + ".json", std::ios::trunc);
      if (!t || !j) Fail(ErrorKind::kIo, "cannot write report " + opts.out_prefix);
      t << tsv.str();
      j << report.dump(2) << '\n';
    } else {
      out << tsv.str();
    }
  } catch (const std::exception &e) {
    log << "ERROR: " << e.what() << '\n';
    return kExitRuntime;
  }

  out << "utterances: " << results.size() << ", metric errors: " << errors.size()
      << '\n';
  for (int c : {kMcd, kMsd, kGpe, kVde, kFfe}) {
    if (means[c])
      out << kColumnNames[c] << ": " << FormatNumber(*means[c]) << " (n="
          << counts[c] << ")\n";
  }
  if (means[kCer])
    out << "CER (S/D/I): "
        << FormatCerPercent(*means[kCer], *means[kSub], *means[kDel], *means[kIns])
        << '\n';
  return kExitOk;
}

}  // namespace ttskit::cli
