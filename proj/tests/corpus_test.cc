// tests/corpus_test.cc

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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ttskit/corpus.h"
#include "ttskit/error.h"

namespace ttskit {
namespace {

constexpr const char *kHeader = "id\taudio\tduration_s\ttext\thyp_text\tsnr_db\tcer\tspeaker\n";

UtteranceRecord Rec(const std::string &id, std::optional<double> snr, std::optional<double> cer,
                    double dur = 1.0) {
  UtteranceRecord r;
  r.id = id;
  r.audio_path = id + ".wav";
  r.text = "text of " + id;
  r.duration_s = dur;
  r.snr_db = snr;
  r.cer = cer;
  return r;
}

TEST(ManifestTest, HeaderOnlyIsEmpty) {
  std::istringstream in(kHeader);
  const auto r = ReadManifest(in);
  EXPECT_TRUE(r.manifest.empty());
  EXPECT_TRUE(r.issues.empty());
}

TEST(ManifestTest, MissingOptionalColumns) {
  std::istringstream in("id\taudio\tduration_s\ttext\nu1\tu1.wav\t1.5\thello\n");
  const auto r = ReadManifest(in);
  ASSERT_EQ(r.manifest.size(), 1u);
  EXPECT_FALSE(r.manifest.records[0].snr_db);
  EXPECT_FALSE(r.manifest.records[0].cer);
  EXPECT_EQ(r.manifest.records[0].duration_s, 1.5);
}

TEST(ManifestTest, DuplicateIdIsNamed) {
  std::istringstream in(std::string(kHeader) + "dup\ta.wav\t1\tx\t\t\t\t\n" +
                        "dup\tb.wav\t1\ty\t\t\t\t\n");
  const auto path = std::filesystem::temp_directory_path() / "ttskit_dup.tsv";
  {
    std::ofstream f(path);
    f << in.str();
  }
  try {
    LoadManifest(path.string());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("dup"), std::string::npos);
  }
}

TEST(ManifestTest, MalformedRowsAreReportedWithLines) {
  std::istringstream in(std::string(kHeader) + "ok\ta.wav\t1\tx\t\t\t\t\n" +
                        "bad\tb.wav\tnotanumber\ty\t\t\t\t\n");
  const auto r = ReadManifest(in);
  EXPECT_EQ(r.manifest.size(), 1u);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].line, 3u);
}

TEST(ManifestTest, RoundTripFieldForField) {
  Manifest m;
  m.records.push_back(Rec("b", std::numeric_limits<double>::infinity(), 0.0, 2.25));
  m.records.push_back(Rec("a", -3.5, std::nullopt, 0.1));
  m.records[0].hyp_text = "hyp";
  m.records[0].speaker = "spk1";
  m.records[1].snr_db = -std::numeric_limits<double>::infinity();
  m.records[1].cer = 0.1 + 0.2;
  m.SortAndCheck();
  std::stringstream io;
  WriteManifest(io, m);
  const auto back = ReadManifest(io);
  EXPECT_TRUE(back.issues.empty());
  EXPECT_EQ(back.manifest.records, m.records);
}

TEST(FilterTest, Boundaries) {
  const FilterConfig cfg;
  EXPECT_FALSE(FilterVerdict(Rec("a", 16.0, 0.05), cfg));
  EXPECT_EQ(FilterVerdict(Rec("a", 15.0, 0.05), cfg), std::string(kReasonLowSnr));
  EXPECT_EQ(FilterVerdict(Rec("a", 20.0, 0.10), cfg), std::string(kReasonHighCer));
  EXPECT_EQ(FilterVerdict(Rec("a", 20.0, std::nullopt), cfg), std::string(kReasonMissingField));
  EXPECT_EQ(FilterVerdict(Rec("a", std::nullopt, 0.0), cfg), std::string(kReasonMissingField));
  EXPECT_FALSE(FilterVerdict(Rec("a", std::numeric_limits<double>::infinity(), 0.0), cfg));
  FilterConfig cer_only;
  cer_only.mode = FilterMode::kCerOnly;
  EXPECT_FALSE(FilterVerdict(Rec("a", std::nullopt, 0.05), cer_only));
  EXPECT_TRUE(FilterVerdict(Rec("a", 50.0, 0.10), cer_only));
}

TEST(FilterTest, PartitionAndIdempotence) {
  Manifest m;
  int k = 0;
  for (double snr : {5.0, 15.0, 15.5, 30.0})
    for (double cer : {0.0, 0.09, 0.1, 0.4})
      m.records.push_back(Rec("u" + std::to_string(k++), snr, cer, 1.0 + k));
  m.records.push_back(Rec("u_missing", std::nullopt, std::nullopt));
  m.SortAndCheck();
  const FilterResult r = ApplyFilter(m);
  EXPECT_EQ(r.kept.size() + r.dropped.size(), m.size());
  EXPECT_EQ(r.kept.size(), 4u);
  for (const auto &d : r.dropped)
    for (const auto &kept : r.kept.records) EXPECT_NE(d.record.id, kept.id);
  const FilterResult again = ApplyFilter(r.kept);
  EXPECT_EQ(again.kept.records, r.kept.records);
  EXPECT_TRUE(again.dropped.empty());
  EXPECT_LE(Summarize(r.kept).hours, Summarize(m).hours);
  std::ostringstream report;
  WriteDroppedReport(report, r.dropped);
  EXPECT_NE(report.str().find("\treason\n"), std::string::npos);
  EXPECT_NE(report.str().find("missing-field"), std::string::npos);
}

TEST(SummarizeTest, Basics) {
  EXPECT_EQ(Summarize(Manifest{}).hours, 0.0);
  EXPECT_EQ(Summarize(Manifest{}).num_utterances, 0u);
  Manifest m;
  m.records = {Rec("a", 12.0, std::nullopt, 3600), Rec("b", std::nullopt, 0.07, 3600)};
  m.records[0].speaker = "s";
  const CorpusStats s = Summarize(m);
  EXPECT_DOUBLE_EQ(s.hours, 2.0);
  EXPECT_EQ(s.num_utterances, 2u);
  EXPECT_EQ(s.per_speaker.at("s"), 1u);
  EXPECT_EQ(s.num_without_speaker, 1u);
  EXPECT_EQ(s.snr_db.absent, 1u);
  EXPECT_EQ(s.snr_db.counts[3], 1u);  // [10, 15)
  EXPECT_EQ(s.cer.counts[2], 1u);     // [0.05, 0.1)
}

TEST(FormatNumberTest, ShortestAndInfinite) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(FormatNumber(-std::numeric_limits<double>::infinity()), "-inf");
}

}  // namespace
}  // namespace ttskit
