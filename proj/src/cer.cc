// src/cer.cc

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

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cstdio>
#include <vector>

#include "ttskit/error.h"
#include "ttskit/metrics.h"

namespace ttskit {

namespace {

std::u32string Nfc(const std::u32string &text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) Fail(ErrorKind::kInvalidConfig, "ICU NFC unavailable");
  icu::UnicodeString in = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32 *>(text.data()),
      static_cast<int32_t>(text.size()));
  icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) Fail(ErrorKind::kInvalidConfig, "NFC normalization failed");
  std::u32string result;
  result.reserve(out.length());
  for (int32_t i = 0; i < out.length(); i = out.moveIndex32(i, 1))
    result.push_back(static_cast<char32_t>(out.char32At(i)));
  return result;
}

}  // namespace

std::u32string NormalizeText(std::string_view utf8, const TextNorm &norm) {
  icu::UnicodeString decoded = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  std::u32string chars;
  for (int32_t i = 0; i < decoded.length(); i = decoded.moveIndex32(i, 1))
    chars.push_back(static_cast<char32_t>(decoded.char32At(i)));
  chars = Nfc(chars);

  std::u32string out;
  out.reserve(chars.size());
  bool pending_space = false;
  for (char32_t c : chars) {
    UChar32 cp = static_cast<UChar32>(c);
    if (norm.strip_punctuation && u_ispunct(cp)) continue;
    if (norm.collapse_whitespace && u_isUWhiteSpace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    if (norm.lowercase) cp = u_tolower(cp);
    out.push_back(static_cast<char32_t>(cp));
  }
  return Nfc(out);
}

EditCounts AlignEdits(std::u32string_view reference,
                      std::u32string_view hypothesis) {
  const size_t n = reference.size(), m = hypothesis.size();
  // cost[i][j]: distance between reference[0,i) and hypothesis[0,j).
  std::vector<size_t> cost((n + 1) * (m + 1));
  auto at = [m, &cost](size_t i, size_t j) -> size_t & {
    return cost[i * (m + 1) + j];
  };
  for (size_t i = 0; i <= n; i++) at(i, 0) = i;
  for (size_t j = 0; j <= m; j++) at(0, j) = j;
  for (size_t i = 1; i <= n; i++) {
    for (size_t j = 1; j <= m; j++) {
      const size_t sub =
          at(i - 1, j - 1) + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i, j - 1) + 1, at(i - 1, j) + 1});
    }
  }

  EditCounts counts;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool match = reference[i - 1] == hypothesis[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (match ? 0 : 1)) {
        if (!match) counts.substitutions++;
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && at(i, j) == at(i, j - 1) + 1) {
      counts.insertions++;
      --j;
    } else {
      counts.deletions++;
      --i;
    }
  }
  return counts;
}

CerReport Cer(std::string_view reference, std::string_view hypothesis,
              const TextNorm &norm) {
  const std::u32string ref = NormalizeText(reference, norm);
  const std::u32string hyp = NormalizeText(hypothesis, norm);
  if (ref.empty())
    Fail(ErrorKind::kEmptyReference, "reference text is empty after normalization");
  CerReport r;
  r.counts = AlignEdits(ref, hyp);
  r.n_ref_chars = ref.size();
  const double len = static_cast<double>(ref.size());
  r.substitutions = r.counts.substitutions / len;
  r.deletions = r.counts.deletions / len;
  r.insertions = r.counts.insertions / len;
  // Sum of the parts so the breakdown adds up exactly.
  r.cer = r.substitutions + r.deletions + r.insertions;
  return r;
}

std::string FormatCerPercent(double cer, double substitutions, double deletions,
                             double insertions) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.1f (%.1f/%.1f/%.1f)", 100.0 * cer,
                100.0 * substitutions, 100.0 * deletions, 100.0 * insertions);
  return buf;
}

}  // namespace ttskit
