// src/stft.cc

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

#include "ttskit/stft.h"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.h"
#include "ttskit/error.h"

namespace ttskit {

void StftConfig::Validate() const {
  if (fft_size <= 0 || win_length <= 0 || hop_length <= 0 ||
      win_length > fft_size || hop_length > win_length)
    Fail(ErrorKind::kInvalidConfig,
         "need 0 < hop <= win <= fft, got fft=" + std::to_string(fft_size) +
             " win=" + std::to_string(win_length) +
             " hop=" + std::to_string(hop_length));
}

std::vector<double> HannWindow(int length) {
  std::vector<double> w(length);
  for (int i = 0; i < length; i++)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / length);
  return w;
}

namespace {

// Index into a signal of length n under symmetric reflection (no edge repeat),
// extended periodically for pads longer than the signal.
size_t ReflectIndex(long long i, size_t n) {
  if (n == 1) return 0;
  const long long period = 2 * static_cast<long long>(n - 1);
  long long m = i % period;
  if (m < 0) m += period;
  if (m >= static_cast<long long>(n)) m = period - m;
  return static_cast<size_t>(m);
}

}  // namespace

size_t NumStftFrames(size_t num_samples, const StftConfig &cfg) {
  const size_t pad = cfg.win_length / 2;
  const size_t padded = num_samples + 2 * pad;
  if (padded < static_cast<size_t>(cfg.win_length)) return 0;
  return 1 + (padded - cfg.win_length) / cfg.hop_length;
}

std::vector<std::vector<std::complex<double>>> ComplexStft(
    const Waveform &wave, const StftConfig &cfg) {
  cfg.Validate();
  if (wave.empty()) Fail(ErrorKind::kEmptySignal, "STFT of an empty signal");
  const auto samples = wave.samples();
  const size_t n = samples.size();
  const size_t num_frames = NumStftFrames(n, cfg);
  const long long pad = cfg.win_length / 2;
  const std::vector<double> window = HannWindow(cfg.win_length);
  const size_t num_bins = cfg.fft_size / 2 + 1;

  std::vector<std::vector<std::complex<double>>> out(
      num_frames, std::vector<std::complex<double>>(num_bins));
  std::vector<double> buf(cfg.fft_size, 0.0);
  for (size_t t = 0; t < num_frames; t++) {
    const long long start = static_cast<long long>(t) * cfg.hop_length - pad;
    for (int k = 0; k < cfg.win_length; k++)
      buf[k] = window[k] * samples[ReflectIndex(start + k, n)];
    internal::ForwardRealFft(buf, out[t]);
  }
  return out;
}

FeatureSeq Stft(const Waveform &wave, const StftConfig &cfg) {
  auto frames = ComplexStft(wave, cfg);
  const size_t num_bins = cfg.fft_size / 2 + 1;
  FeatureSeq spec(frames.size(), num_bins,
                  static_cast<double>(wave.sample_rate()) / cfg.hop_length,
                  FeatureKind::kMagnitudeSpectrogram);
  for (size_t t = 0; t < frames.size(); t++)
    for (size_t k = 0; k < num_bins; k++) spec(t, k) = std::abs(frames[t][k]);
  return spec;
}

Waveform InverseStft(const std::vector<std::vector<std::complex<double>>> &frames,
                     const StftConfig &cfg, int sample_rate, size_t num_samples) {
  cfg.Validate();
  const size_t num_bins = cfg.fft_size / 2 + 1;
  const long long pad = cfg.win_length / 2;
  const std::vector<double> window = HannWindow(cfg.win_length);

  if (num_samples == 0) return Waveform({}, sample_rate);
  std::vector<double> acc(num_samples, 0.0), norm(num_samples, 0.0);
  std::vector<double> buf(cfg.fft_size);
  for (size_t t = 0; t < frames.size(); t++) {
    if (frames[t].size() != num_bins)
      Fail(ErrorKind::kDimensionMismatch, "STFT frame has wrong bin count");
    internal::InverseRealFft(frames[t], buf);
    const long long start = static_cast<long long>(t) * cfg.hop_length - pad;
    for (int k = 0; k < cfg.win_length; k++) {
      // Samples that fell in the reflect padding fold back onto their source,
      // which makes this the least-squares inverse of ComplexStft.
      const size_t idx = ReflectIndex(start + k, num_samples);
      acc[idx] += window[k] * buf[k] / cfg.fft_size;
      norm[idx] += window[k] * window[k];
    }
  }
  for (size_t i = 0; i < num_samples; i++)
    acc[i] = norm[i] > 1e-8 ? acc[i] / norm[i] : 0.0;
  return Waveform(std::move(acc), sample_rate);
}

}  // namespace ttskit
