// src/dtw.cc

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

#include "ttskit/dtw.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ttskit/error.h"

namespace ttskit {

double EuclideanDistance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (size_t d = 0; d < a.size(); d++) {
    const double diff = a[d] - b[d];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

DtwAlignment DtwAlign(const FeatureSeq &a, const FeatureSeq &b,
                      FrameDistance /*dist*/) {
  if (a.empty() || b.empty())
    Fail(ErrorKind::kEmptySequence, "DTW needs two non-empty sequences");
  if (a.dim() != b.dim())
    Fail(ErrorKind::kDimensionMismatch,
         "DTW inputs have dims " + std::to_string(a.dim()) + " and " +
             std::to_string(b.dim()));
  const size_t n = a.num_frames(), m = b.num_frames();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // acc[i*m + j]: cheapest path cost from (0,0) through (i,j).
  std::vector<double> acc(n * m, kInf);
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < m; j++) {
      const double d = EuclideanDistance(a.Row(i), b.Row(j));
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        best = kInf;
        if (i > 0 && j > 0) best = std::min(best, acc[(i - 1) * m + j - 1]);
        if (i > 0) best = std::min(best, acc[(i - 1) * m + j]);
        if (j > 0) best = std::min(best, acc[i * m + j - 1]);
      }
      acc[i * m + j] = best + d;
    }
  }

  DtwAlignment out;
  out.total_cost = acc[n * m - 1];
  size_t i = n - 1, j = m - 1;
  out.path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = acc[(i - 1) * m + j - 1];
      const double up = acc[(i - 1) * m + j];
      const double left = acc[i * m + j - 1];
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    }
    out.path.emplace_back(i, j);
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

}  // namespace ttskit
