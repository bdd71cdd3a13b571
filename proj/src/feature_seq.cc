// src/feature_seq.cc

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

#include "ttskit/feature_seq.h"

#include <cmath>
#include <string>

#include "ttskit/error.h"

namespace ttskit {

std::string_view FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kMagnitudeSpectrogram: return "magnitude_spectrogram";
    case FeatureKind::kLogMel: return "log_mel";
    case FeatureKind::kMfcc: return "mfcc";
  }
  return "unknown";
}

FeatureSeq::FeatureSeq(size_t num_frames, size_t dim, double frame_rate,
                       FeatureKind kind)
    : data_(num_frames * dim, 0.0),
      num_frames_(num_frames),
      dim_(dim),
      frame_rate_(frame_rate),
      kind_(kind) {}

FeatureSeq::FeatureSeq(std::vector<double> data, size_t num_frames, size_t dim,
                       double frame_rate, FeatureKind kind)
    : data_(std::move(data)),
      num_frames_(num_frames),
      dim_(dim),
      frame_rate_(frame_rate),
      kind_(kind) {
  if (data_.size() != num_frames_ * dim_)
    Fail(ErrorKind::kDimensionMismatch,
         "feature data has " + std::to_string(data_.size()) +
             " entries, expected " + std::to_string(num_frames_ * dim_));
  for (double v : data_)
    if (!std::isfinite(v))
      Fail(ErrorKind::kInvalidConfig, "non-finite feature value");
}

FeatureSeq FeatureSeq::FromRows(const std::vector<std::vector<double>> &rows,
                                FeatureKind kind, double frame_rate) {
  size_t dim = rows.empty() ? 0 : rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * dim);
  for (const auto &row : rows) {
    if (row.size() != dim)
      Fail(ErrorKind::kDimensionMismatch, "ragged feature rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return FeatureSeq(std::move(data), rows.size(), dim, frame_rate, kind);
}

}  // namespace ttskit
