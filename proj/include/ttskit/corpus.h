// include/ttskit/corpus.h

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

#ifndef TTSKIT_CORPUS_H_
#define TTSKIT_CORPUS_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ttskit {

/// One dataset row. snr_db may hold +/-infinity.
struct UtteranceRecord {
  std::string id;
  std::string audio_path;
  std::string text;
  std::optional<std::string> hyp_text;
  double duration_s = 0.0;
  std::optional<double> snr_db;
  std::optional<double> cer;
  std::optional<std::string> speaker;

  bool operator==(const UtteranceRecord &) const = default;
};

/// Records are kept sorted by id.
struct Manifest {
  std::vector<UtteranceRecord> records;
  std::string source_tag;

  size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  /// Sorts records by id; throws kParse naming the first duplicated id.
  void SortAndCheck();
};

/// Column order written by WriteManifest.
inline constexpr const char *kManifestColumns[] = {
    "id", "audio", "duration_s", "text", "hyp_text", "snr_db", "cer", "speaker"};

struct ParseIssue {
  size_t line = 0;
  std::string message;
};

struct ManifestReadResult {
  Manifest manifest;
  /// Rows that failed to parse and were skipped.
  std::vector<ParseIssue> issues;
};

/// Parses a TSV manifest with a header row. Columns are matched by name;
/// id, audio, duration_s and text are required, the rest are optional and
/// unknown columns are ignored. Malformed rows are skipped and reported.
/// Throws kParse for a bad header and kParse naming the id on duplicates.
ManifestReadResult ReadManifest(std::istream &in);

/// Strict load: throws kIo if the file cannot be read and kParse listing
/// every malformed row (with line numbers) if any row is bad.
Manifest LoadManifest(const std::string &path);

void WriteManifest(std::ostream &out, const Manifest &manifest);
void SaveManifest(const std::string &path, const Manifest &manifest);

/// Shortest round-trip decimal; "inf" / "-inf" for infinities.
std::string FormatNumber(double value);

// ---------------------------------------------------------------------------
// Outlier filter.

enum class FilterMode {
  /// Keep iff snr_db > min_snr_db and cer < max_cer.
  kSnrAndCer,
  /// Keep iff cer < max_cer.
  kCerOnly,
};

struct FilterConfig {
  double min_snr_db = 15.0;
  double max_cer = 0.10;
  FilterMode mode = FilterMode::kSnrAndCer;

  void Validate() const;
};

inline constexpr const char *kReasonMissingField = "missing-field";
inline constexpr const char *kReasonLowSnr = "low-snr";
inline constexpr const char *kReasonHighCer = "high-cer";

struct DroppedRecord {
  UtteranceRecord record;
  std::string reason;
};

struct FilterResult {
  Manifest kept;
  std::vector<DroppedRecord> dropped;
};

/// Reason the record would be dropped, or nullopt when it is kept.
std::optional<std::string> FilterVerdict(const UtteranceRecord &record,
                                         const FilterConfig &cfg);

FilterResult ApplyFilter(const Manifest &manifest, const FilterConfig &cfg = {});

/// Manifest columns plus a trailing `reason` column.
void WriteDroppedReport(std::ostream &out, const std::vector<DroppedRecord> &dropped);

// ---------------------------------------------------------------------------
// Statistics.

struct Histogram {
  /// Bin k covers [edges[k-1], edges[k]); bin 0 is everything below
  /// edges[0] and the last bin everything at or above edges.back().
  std::vector<double> edges;
  std::vector<size_t> counts;
  size_t absent = 0;

  explicit Histogram(std::vector<double> bin_edges);
  void Add(std::optional<double> value);
};

struct CorpusStats {
  double hours = 0.0;
  size_t num_utterances = 0;
  std::map<std::string, size_t> per_speaker;
  size_t num_without_speaker = 0;
  Histogram snr_db{{0, 5, 10, 15, 20, 25, 30, 35, 40}};
  Histogram cer{{0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5}};
};

CorpusStats Summarize(const Manifest &manifest);

}  // namespace ttskit

#endif  // TTSKIT_CORPUS_H_
