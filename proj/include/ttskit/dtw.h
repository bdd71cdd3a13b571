// include/ttskit/dtw.h

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

#ifndef TTSKIT_DTW_H_
#define TTSKIT_DTW_H_

#include <span>
#include <utility>
#include <vector>

#include "ttskit/feature_seq.h"

namespace ttskit {

enum class FrameDistance { kEuclidean };

struct DtwAlignment {
  /// Monotone unit-step path from (0, 0) to (T1 - 1, T2 - 1).
  std::vector<std::pair<size_t, size_t>> path;
  /// Sum of frame distances along `path`.
  double total_cost = 0.0;
};

double EuclideanDistance(std::span<const double> a, std::span<const double> b);

/// Minimum-cost alignment over steps (1,0), (0,1), (1,1) with no slope
/// constraint. When several predecessors tie during backtrace the diagonal
/// wins, then (1,0), then (0,1).
DtwAlignment DtwAlign(const FeatureSeq &a, const FeatureSeq &b,
                      FrameDistance dist = FrameDistance::kEuclidean);

}  // namespace ttskit

#endif  // TTSKIT_DTW_H_
