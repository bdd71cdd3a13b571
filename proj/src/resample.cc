// src/resample.cc

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

#include "ttskit/resample.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ttskit/error.h"

namespace ttskit {

namespace {

constexpr double kCutoffFraction = 0.97;
constexpr int kNumZeros = 16;

}  // namespace

Waveform Resample(const Waveform &wave, int target_rate) {
  if (target_rate <= 0)
    Fail(ErrorKind::kInvalidRate,
         "target rate must be positive, got " + std::to_string(target_rate));
  const int source_rate = wave.sample_rate();
  if (source_rate == target_rate) return wave;

  const auto in = wave.samples();
  const long long n_in = static_cast<long long>(in.size());
  const size_t n_out = static_cast<size_t>(
      std::llround(static_cast<double>(in.size()) * target_rate / source_rate));
  const double step = static_cast<double>(source_rate) / target_rate;
  // Cutoff in cycles per input sample, relative to the input Nyquist.
  const double cutoff = kCutoffFraction * std::min(1.0, 1.0 / step);
  const double half_width = kNumZeros / cutoff;

  std::vector<double> out(n_out, 0.0);
  for (size_t n = 0; n < n_out; n++) {
    const double center = n * step;
    const long long first =
        std::max(0LL, static_cast<long long>(std::ceil(center - half_width)));
    const long long last = std::min(
        n_in - 1, static_cast<long long>(std::floor(center + half_width)));
    double acc = 0.0;
    for (long long k = first; k <= last; k++) {
      const double tau = k - center;
      const double x = cutoff * tau;
      const double sinc =
          x == 0.0 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
      const double window =
          0.5 + 0.5 * std::cos(std::numbers::pi * tau / half_width);
      acc += in[k] * cutoff * sinc * window;
    }
    out[n] = acc;
  }
  return Waveform(std::move(out), target_rate);
}

}  // namespace ttskit
