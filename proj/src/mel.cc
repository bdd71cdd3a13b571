// src/mel.cc

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

#include "ttskit/mel.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ttskit/error.h"

namespace ttskit {

void MelConfig::Validate(int sample_rate) const {
  stft.Validate();
  const double upper = UpperEdge(sample_rate);
  if (n_mels < 1) Fail(ErrorKind::kInvalidConfig, "n_mels must be >= 1");
  if (!(f_min >= 0.0 && f_min < upper && upper <= sample_rate / 2.0))
    Fail(ErrorKind::kInvalidConfig,
         "need 0 <= f_min < f_max <= " + std::to_string(sample_rate / 2.0) +
             " Hz, got f_min=" + std::to_string(f_min) +
             " f_max=" + std::to_string(upper));
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

namespace {

// n_mels + 2 band edges equally spaced on the mel scale.
std::vector<double> BandEdgesHz(const MelConfig &cfg, int sample_rate) {
  const double lo = HzToMel(cfg.f_min);
  const double hi = HzToMel(cfg.UpperEdge(sample_rate));
  std::vector<double> edges(cfg.n_mels + 2);
  for (int m = 0; m < cfg.n_mels + 2; m++)
    edges[m] = MelToHz(lo + (hi - lo) * m / (cfg.n_mels + 1));
  return edges;
}

}  // namespace

std::vector<double> MelCenterFrequencies(const MelConfig &cfg,
                                         int sample_rate) {
  cfg.Validate(sample_rate);
  auto edges = BandEdgesHz(cfg, sample_rate);
  return {edges.begin() + 1, edges.end() - 1};
}

std::vector<std::vector<double>> MelFilterbank(const MelConfig &cfg,
                                               int sample_rate) {
  cfg.Validate(sample_rate);
  const auto edges = BandEdgesHz(cfg, sample_rate);
  const int num_bins = cfg.stft.fft_size / 2 + 1;
  std::vector<std::vector<double>> bank(cfg.n_mels,
                                        std::vector<double>(num_bins, 0.0));
  for (int m = 0; m < cfg.n_mels; m++) {
    const double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (int k = 0; k < num_bins; k++) {
      const double f = static_cast<double>(k) * sample_rate / cfg.stft.fft_size;
      const double rise = (f - left) / (center - left);
      const double fall = (right - f) / (right - center);
      bank[m][k] = std::max(0.0, std::min(rise, fall));
    }
  }
  return bank;
}

FeatureSeq LogMel(const Waveform &wave, const MelConfig &cfg) {
  cfg.Validate(wave.sample_rate());
  const FeatureSeq mag = Stft(wave, cfg.stft);
  const auto bank = MelFilterbank(cfg, wave.sample_rate());
  FeatureSeq out(mag.num_frames(), cfg.n_mels, mag.frame_rate(),
                 FeatureKind::kLogMel);
  std::vector<double> power(mag.dim());
  for (size_t t = 0; t < mag.num_frames(); t++) {
    auto row = mag.Row(t);
    for (size_t k = 0; k < row.size(); k++) power[k] = row[k] * row[k];
    for (int m = 0; m < cfg.n_mels; m++) {
      double e = 0.0;
      for (size_t k = 0; k < power.size(); k++) e += bank[m][k] * power[k];
      out(t, m) = std::log(e + kLogMelFloor);
    }
  }
  return out;
}

std::vector<double> DctII(std::span<const double> x) {
  const size_t n = x.size();
  std::vector<double> c(n, 0.0);
  if (n == 0) return c;
  for (size_t k = 0; k < n; k++) {
    double acc = 0.0;
    for (size_t i = 0; i < n; i++)
      acc += x[i] * std::cos(std::numbers::pi * k * (2.0 * i + 1.0) / (2.0 * n));
    c[k] = acc * std::sqrt((k == 0 ? 1.0 : 2.0) / n);
  }
  return c;
}

FeatureSeq MfccFromLogMel(const FeatureSeq &log_mel, int n_coeffs) {
  if (n_coeffs < 1 || static_cast<size_t>(n_coeffs) >= log_mel.dim())
    Fail(ErrorKind::kInvalidConfig,
         "n_coeffs must be in [1, n_mels), got " + std::to_string(n_coeffs) +
             " with n_mels=" + std::to_string(log_mel.dim()));
  FeatureSeq out(log_mel.num_frames(), n_coeffs, log_mel.frame_rate(),
                 FeatureKind::kMfcc);
  for (size_t t = 0; t < log_mel.num_frames(); t++) {
    const auto c = DctII(log_mel.Row(t));
    std::copy(c.begin() + 1, c.begin() + 1 + n_coeffs, out.Row(t).begin());
  }
  return out;
}

FeatureSeq Mfcc(const Waveform &wave, const MelConfig &cfg, int n_coeffs) {
  if (n_coeffs < 1 || n_coeffs >= cfg.n_mels)
    Fail(ErrorKind::kInvalidConfig, "n_coeffs must be in [1, n_mels)");
  return MfccFromLogMel(LogMel(wave, cfg), n_coeffs);
}

}  // namespace ttskit
