// src/griffin_lim.cc

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

#include "ttskit/griffin_lim.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ttskit/error.h"

namespace ttskit {

namespace {

using ComplexFrames = std::vector<std::vector<std::complex<double>>>;

ComplexFrames WithPhase(const FeatureSeq &magnitude, const ComplexFrames &phase) {
  ComplexFrames out = phase;
  for (size_t t = 0; t < out.size(); t++)
    for (size_t k = 0; k < out[t].size(); k++) out[t][k] *= magnitude(t, k);
  return out;
}

// Index of the local magnitude maximum reached by climbing from bin k.
size_t ClimbToPeak(std::span<const double> mag, size_t k) {
  while (true) {
    size_t best = k;
    if (k > 0 && mag[k - 1] > mag[best]) best = k - 1;
    if (k + 1 < mag.size() && mag[k + 1] > mag[best]) best = k + 1;
    if (best == k) return k;
    k = best;
  }
}

// Phase-locked vocoder start: psi holds each bin's phase at the window
// center, drawn at random for frame 0. Later frames advance the phase of the
// bin's peak by its (parabolically refined) frequency times hop. The -pi*k
// term moves the reference from the window center to the frame start.
ComplexFrames PhaseLockedInit(const FeatureSeq &magnitude, const StftConfig &cfg,
                              std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const size_t num_bins = magnitude.dim();
  std::vector<double> psi(num_bins), next(num_bins);
  for (double &p : psi) p = angle(rng);
  ComplexFrames phase(magnitude.num_frames(),
                      std::vector<std::complex<double>>(num_bins));
  for (size_t t = 0; t < phase.size(); t++) {
    const auto mag = magnitude.Row(t);
    for (size_t k = 0; k < num_bins; k++) {
      const size_t p = ClimbToPeak(mag, k);
      double delta = 0.0;
      if (p > 0 && p + 1 < num_bins) {
        const double a = std::log(mag[p - 1] + 1e-30), b = std::log(mag[p] + 1e-30),
                     c = std::log(mag[p + 1] + 1e-30);
        const double den = a - 2.0 * b + c;
        if (den < 0.0) delta = 0.5 * (a - c) / den;
      }
      const double cycles = (p + delta) / cfg.fft_size * cfg.hop_length;
      next[k] = t == 0 ? psi[p] : psi[p] + 2.0 * std::numbers::pi * cycles;
    }
    psi.swap(next);
    for (size_t k = 0; k < num_bins; k++)
      phase[t][k] = std::polar(1.0, psi[k] - std::numbers::pi * static_cast<double>(k));
  }
  return phase;
}

}  // namespace

Waveform GriffinLim(const FeatureSeq &magnitude, const StftConfig &cfg,
                    int sample_rate, const GriffinLimOptions &opts) {
  cfg.Validate();
  if (opts.n_iters < 1)
    Fail(ErrorKind::kInvalidConfig, "Griffin-Lim needs n_iters >= 1");
  if (sample_rate <= 0) Fail(ErrorKind::kInvalidRate, "sample rate must be > 0");
  const size_t num_bins = cfg.fft_size / 2 + 1;
  if (magnitude.empty())
    Fail(ErrorKind::kEmptySequence, "empty spectrogram");
  if (magnitude.dim() != num_bins)
    Fail(ErrorKind::kInvalidConfig,
         "spectrogram has " + std::to_string(magnitude.dim()) +
             " bins, fft_size implies " + std::to_string(num_bins));
  for (double v : magnitude.data())
    if (v < 0.0)
      Fail(ErrorKind::kInvalidConfig, "negative magnitude in spectrogram");

  const size_t num_frames = magnitude.num_frames();
  const size_t num_samples =
      opts.num_samples.value_or(static_cast<size_t>(cfg.hop_length) *
                                (num_frames - 1));

  std::mt19937_64 rng(opts.seed);
  ComplexFrames phase;
  if (opts.init == PhaseInit::kPhaseLocked) {
    phase = PhaseLockedInit(magnitude, cfg, rng);
  } else {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    phase.assign(num_frames, std::vector<std::complex<double>>(num_bins));
    for (auto &frame : phase)
      for (auto &p : frame) p = std::polar(1.0, angle(rng));
  }

  if (num_samples == 0) return Waveform({}, sample_rate);

  for (int it = 0; it < opts.n_iters; it++) {
    Waveform estimate =
        InverseStft(WithPhase(magnitude, phase), cfg, sample_rate, num_samples);
    ComplexFrames rebuilt = ComplexStft(estimate, cfg);
    const size_t shared = std::min(rebuilt.size(), num_frames);
    for (size_t t = 0; t < shared; t++) {
      for (size_t k = 0; k < num_bins; k++) {
        const double mag = std::abs(rebuilt[t][k]);
        if (mag > 0.0) phase[t][k] = rebuilt[t][k] / mag;
      }
    }
  }
  return InverseStft(WithPhase(magnitude, phase), cfg, sample_rate, num_samples);
}

double SpectralConvergence(const FeatureSeq &target, const FeatureSeq &estimate) {
  if (target.dim() != estimate.dim())
    Fail(ErrorKind::kDimensionMismatch, "spectrogram bin counts differ");
  const size_t shared = std::min(target.num_frames(), estimate.num_frames());
  double num = 0.0, den = 0.0;
  for (size_t t = 0; t < shared; t++) {
    for (size_t k = 0; k < target.dim(); k++) {
      const double diff = estimate(t, k) - target(t, k);
      num += diff * diff;
      den += target(t, k) * target(t, k);
    }
  }
  if (den == 0.0)
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

}  // namespace ttskit
