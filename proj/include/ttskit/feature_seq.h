// include/ttskit/feature_seq.h

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

#ifndef TTSKIT_FEATURE_SEQ_H_
#define TTSKIT_FEATURE_SEQ_H_

#include <span>
#include <string_view>
#include <vector>

namespace ttskit {

enum class FeatureKind { kMagnitudeSpectrogram, kLogMel, kMfcc };

std::string_view FeatureKindName(FeatureKind kind);

/// Time-major T x D matrix of per-frame feature vectors.
class FeatureSeq {
 public:
  FeatureSeq() = default;
  FeatureSeq(size_t num_frames, size_t dim, double frame_rate, FeatureKind kind);
  /// Takes row-major data; data.size() must equal num_frames * dim and every
  /// entry must be finite.
  FeatureSeq(std::vector<double> data, size_t num_frames, size_t dim,
             double frame_rate, FeatureKind kind);

  /// Builds a sequence from explicit frames (tests and frame-level metric
  /// entry points). All rows must have the same length.
  static FeatureSeq FromRows(const std::vector<std::vector<double>> &rows,
                             FeatureKind kind, double frame_rate = 0.0);

  size_t num_frames() const { return num_frames_; }
  size_t dim() const { return dim_; }
  double frame_rate() const { return frame_rate_; }
  FeatureKind kind() const { return kind_; }
  bool empty() const { return num_frames_ == 0; }

  std::span<const double> Row(size_t t) const {
    return {data_.data() + t * dim_, dim_};
  }
  std::span<double> Row(size_t t) { return {data_.data() + t * dim_, dim_}; }
  double operator()(size_t t, size_t d) const { return data_[t * dim_ + d]; }
  double &operator()(size_t t, size_t d) { return data_[t * dim_ + d]; }

  std::span<const double> data() const { return data_; }

  bool operator==(const FeatureSeq &other) const = default;

 private:
  std::vector<double> data_;
  size_t num_frames_ = 0;
  size_t dim_ = 0;
  double frame_rate_ = 0.0;
  FeatureKind kind_ = FeatureKind::kMagnitudeSpectrogram;
};

}  // namespace ttskit

#endif  // TTSKIT_FEATURE_SEQ_H_
