// tests/cer_test.cc

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

#include <random>

#include "support/oracles.h"
#include "ttskit/error.h"
#include "ttskit/metrics.h"

namespace ttskit {
namespace {

TEST(CerTest, IdenticalIsZero) {
  const CerReport r = Cer("Hello there", "Hello there");
  EXPECT_EQ(r.cer, 0.0);
  EXPECT_EQ(r.counts.distance(), 0u);
}

TEST(CerTest, SittingKitten) {
  const CerReport r = Cer("sitting", "kitten");
  EXPECT_EQ(r.counts.substitutions, 2u);
  EXPECT_EQ(r.counts.deletions, 1u);
  EXPECT_EQ(r.counts.insertions, 0u);
  EXPECT_EQ(r.n_ref_chars, 7u);
  EXPECT_NEAR(r.cer, 3.0 / 7, 1e-12);
  EXPECT_NEAR(r.substitutions, 2.0 / 7, 1e-12);
  EXPECT_NEAR(r.deletions, 1.0 / 7, 1e-12);
}

TEST(CerTest, InsertionsCanExceedOne) {
  const CerReport r = Cer("ab", "abab");
  EXPECT_EQ(r.counts.insertions, 2u);
  EXPECT_EQ(r.cer, 1.0);
  EXPECT_EQ(Cer("a", "bbbb").cer, 4.0);
}

TEST(CerTest, NormalizationApplied) {
  EXPECT_EQ(Cer("Hello, World!", "hello   world").cer, 0.0);
  // Composed and decomposed e-acute compare equal after NFC.
  EXPECT_EQ(Cer("caf\xC3\xA9", "cafe\xCC\x81").cer, 0.0);
  TextNorm raw{false, false, false};
  EXPECT_GT(Cer("Hello, World!", "hello world", raw).cer, 0.0);
}

TEST(CerTest, NormalizeIsIdempotent) {
  for (const char *s : {"  Mixed CASE,  spaces\tand\npunct!! ", "\xC3\x89T\xC3\x89", "a-b_c"}) {
    const std::u32string once = NormalizeText(s);
    std::string utf8;
    for (char32_t c : once) {
      // Re-encode to UTF-8.
      if (c < 0x80) {
        utf8 += static_cast<char>(c);
      } else if (c < 0x800) {
        utf8 += static_cast<char>(0xC0 | (c >> 6));
        utf8 += static_cast<char>(0x80 | (c & 0x3F));
      } else {
        utf8 += static_cast<char>(0xE0 | (c >> 12));
        utf8 += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        utf8 += static_cast<char>(0x80 | (c & 0x3F));
      }
    }
    EXPECT_EQ(NormalizeText(utf8), once) << s;
  }
  EXPECT_EQ(NormalizeText("  A  b ,c  "), U"a b c");
}

TEST(CerTest, EmptyReference) {
  try {
    Cer(" ,. ", "abc");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyReference);
  }
}

TEST(CerTest, MatchesDpOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(0, 10), letter(0, 2);
  for (int trial = 0; trial < 3000; trial++) {
    std::u32string a, b;
    const int na = len(rng), nb = len(rng);
    for (int i = 0; i < na; i++) a += U"abc"[letter(rng)];
    for (int i = 0; i < nb; i++) b += U"abc"[letter(rng)];
    const EditCounts e = AlignEdits(a, b);
    const testing::EditOracle o = testing::OracleEdits(a, b);
    ASSERT_EQ(e.distance(), o.distance);
    ASSERT_EQ(e.substitutions, o.substitutions);
    ASSERT_EQ(e.deletions, o.deletions);
    ASSERT_EQ(e.insertions, o.insertions);
    // Alignment bookkeeping: every ref char is matched, substituted or deleted.
    ASSERT_LE(e.substitutions + e.deletions, a.size());
    ASSERT_EQ(a.size() - e.deletions + e.insertions, b.size());
  }
}

TEST(CerTest, PercentFormat) {
  EXPECT_EQ(FormatCerPercent(0.033, 0.002, 0.005, 0.025), "3.3 (0.2/0.5/2.5)");
}

}  // namespace
}  // namespace ttskit
