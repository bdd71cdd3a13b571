// src/corpus.cc

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

#include "ttskit/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "ttskit/error.h"

namespace ttskit {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<double> ParseDouble(std::string_view s) {
  double v = 0.0;
  const char *begin = s.data(), *end = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || std::isnan(v)) return std::nullopt;
  return v;
}

std::optional<std::string> OptionalText(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return std::string(s);
}

void CheckField(const std::string &value, const char *column) {
  if (value.find_first_of("\t\n\r") != std::string::npos)
    Fail(ErrorKind::kFormat, std::string("field '") + column +
                                 "' contains a tab or newline: " + value);
}

void WriteRecordFields(std::ostream &out, const UtteranceRecord &r) {
  CheckField(r.id, "id");
  CheckField(r.audio_path, "audio");
  CheckField(r.text, "text");
  if (r.hyp_text) CheckField(*r.hyp_text, "hyp_text");
  if (r.speaker) CheckField(*r.speaker, "speaker");
  out << r.id << '\t' << r.audio_path << '\t' << FormatNumber(r.duration_s)
      << '\t' << r.text << '\t' << r.hyp_text.value_or("") << '\t'
      << (r.snr_db ? FormatNumber(*r.snr_db) : "") << '\t'
      << (r.cer ? FormatNumber(*r.cer) : "") << '\t' << r.speaker.value_or("");
}

void WriteHeader(std::ostream &out, bool with_reason) {
  bool first = true;
  for (const char *col : kManifestColumns) {
    if (!first) out << '\t';
    out << col;
    first = false;
  }
  if (with_reason) out << "\treason";
  out << '\n';
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void Manifest::SortAndCheck() {
  std::stable_sort(records.begin(), records.end(),
                   [](const auto &a, const auto &b) { return a.id < b.id; });
  for (size_t i = 1; i < records.size(); i++)
    if (records[i].id == records[i - 1].id)
      Fail(ErrorKind::kParse, "duplicate id '" + records[i].id + "'");
}

ManifestReadResult ReadManifest(std::istream &in) {
  ManifestReadResult result;
  std::string line;
  size_t line_no = 0;
  std::map<std::string, size_t> column;
  size_t num_columns = 0;
  std::vector<size_t> record_lines;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      const auto names = SplitTabs(line);
      num_columns = names.size();
      for (size_t i = 0; i < names.size(); i++) {
        if (!column.emplace(std::string(names[i]), i).second)
          Fail(ErrorKind::kParse,
               "line 1: duplicate column '" + std::string(names[i]) + "'");
      }
      for (const char *required : {"id", "audio", "duration_s", "text"})
        if (!column.count(required))
          Fail(ErrorKind::kParse,
               std::string("line 1: missing required column '") + required + "'");
      continue;
    }
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    auto issue = [&](const std::string &msg) {
      result.issues.push_back({line_no, msg});
    };
    if (fields.size() != num_columns) {
      issue("expected " + std::to_string(num_columns) + " fields, got " +
            std::to_string(fields.size()));
      continue;
    }
    auto get = [&](const char *name) -> std::string_view {
      auto it = column.find(name);
      return it == column.end() ? std::string_view() : fields[it->second];
    };

    UtteranceRecord r;
    r.id = std::string(get("id"));
    r.audio_path = std::string(get("audio"));
    r.text = std::string(get("text"));
    r.hyp_text = OptionalText(get("hyp_text"));
    r.speaker = OptionalText(get("speaker"));
    if (r.id.empty()) {
      issue("empty id");
      continue;
    }
    const auto duration = ParseDouble(get("duration_s"));
    if (!duration || !std::isfinite(*duration) || *duration <= 0.0) {
      issue("id '" + r.id + "': duration_s must be a positive number, got '" +
            std::string(get("duration_s")) + "'");
      continue;
    }
    r.duration_s = *duration;
    if (auto s = get("snr_db"); !s.empty()) {
      r.snr_db = ParseDouble(s);
      if (!r.snr_db) {
        issue("id '" + r.id + "': bad snr_db '" + std::string(s) + "'");
        continue;
      }
    }
    if (auto s = get("cer"); !s.empty()) {
      r.cer = ParseDouble(s);
      if (!r.cer || !std::isfinite(*r.cer) || *r.cer < 0.0) {
        issue("id '" + r.id + "': bad cer '" + std::string(s) + "'");
        continue;
      }
    }
    result.manifest.records.push_back(std::move(r));
    record_lines.push_back(line_no);
  }
  if (line_no == 0) Fail(ErrorKind::kParse, "line 1: missing header");

  // Duplicates: keep the first occurrence, report the rest.
  std::set<std::string> seen;
  std::vector<UtteranceRecord> unique;
  for (size_t k = 0; k < result.manifest.records.size(); k++) {
    auto &r = result.manifest.records[k];
    if (!seen.insert(r.id).second) {
      result.issues.push_back({record_lines[k], "duplicate id '" + r.id + "'"});
      continue;
    }
    unique.push_back(std::move(r));
  }
  result.manifest.records = std::move(unique);
  result.manifest.SortAndCheck();
  return result;
}

Manifest LoadManifest(const std::string &path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kIo, "cannot open manifest " + path);
  ManifestReadResult result = ReadManifest(in);
  if (!result.issues.empty()) {
    std::ostringstream msg;
    msg << path << ": " << result.issues.size() << " malformed row(s)";
    for (const auto &issue : result.issues) {
      msg << "\n  ";
      if (issue.line > 0) msg << "line " << issue.line << ": ";
      msg << issue.message;
    }
    Fail(ErrorKind::kParse, msg.str());
  }
  return std::move(result.manifest);
}

void WriteManifest(std::ostream &out, const Manifest &manifest) {
  WriteHeader(out, false);
  for (const auto &r : manifest.records) {
    WriteRecordFields(out, r);
    out << '\n';
  }
}

void SaveManifest(const std::string &path, const Manifest &manifest) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) Fail(ErrorKind::kIo, "cannot write manifest " + path);
  WriteManifest(out, manifest);
  if (!out) Fail(ErrorKind::kIo, "write failed for " + path);
}

void FilterConfig::Validate() const {
  if (!std::isfinite(min_snr_db) || !std::isfinite(max_cer))
    Fail(ErrorKind::kInvalidConfig, "filter thresholds must be finite");
}

std::optional<std::string> FilterVerdict(const UtteranceRecord &record,
                                         const FilterConfig &cfg) {
  const bool needs_snr = cfg.mode == FilterMode::kSnrAndCer;
  if (!record.cer || (needs_snr && !record.snr_db)) return kReasonMissingField;
  const bool snr_ok = !needs_snr || *record.snr_db > cfg.min_snr_db;
  const bool cer_ok = *record.cer < cfg.max_cer;
  if (!snr_ok && !cer_ok) return std::string(kReasonLowSnr) + "," + kReasonHighCer;
  if (!snr_ok) return kReasonLowSnr;
  if (!cer_ok) return kReasonHighCer;
  return std::nullopt;
}

FilterResult ApplyFilter(const Manifest &manifest, const FilterConfig &cfg) {
  cfg.Validate();
  FilterResult result;
  result.kept.source_tag = manifest.source_tag;
  for (const auto &r : manifest.records) {
    if (auto reason = FilterVerdict(r, cfg))
      result.dropped.push_back({r, std::move(*reason)});
    else
      result.kept.records.push_back(r);
  }
  return result;
}

void WriteDroppedReport(std::ostream &out,
                        const std::vector<DroppedRecord> &dropped) {
  WriteHeader(out, true);
  for (const auto &d : dropped) {
    WriteRecordFields(out, d.record);
    out << '\t' << d.reason << '\n';
  }
}

Histogram::Histogram(std::vector<double> bin_edges)
    : edges(std::move(bin_edges)), counts(edges.size() + 1, 0) {}

void Histogram::Add(std::optional<double> value) {
  if (!value) {
    absent++;
    return;
  }
  const auto it = std::upper_bound(edges.begin(), edges.end(), *value);
  counts[static_cast<size_t>(it - edges.begin())]++;
}

CorpusStats Summarize(const Manifest &manifest) {
  CorpusStats stats;
  double seconds = 0.0;
  for (const auto &r : manifest.records) {
    seconds += r.duration_s;
    if (r.speaker)
      stats.per_speaker[*r.speaker]++;
    else
      stats.num_without_speaker++;
    stats.snr_db.Add(r.snr_db);
    stats.cer.Add(r.cer);
  }
  stats.num_utterances = manifest.records.size();
  stats.hours = seconds / 3600.0;
  return stats;
}

}  // namespace ttskit
