// src/enhance.cc

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

#include "ttskit/enhance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "ttskit/error.h"

namespace ttskit {

namespace {

void CheckSameShape(const Waveform &a, const Waveform &b) {
  if (a.sample_rate() != b.sample_rate())
    Fail(ErrorKind::kRateMismatch,
         "sample rates differ: " + std::to_string(a.sample_rate()) + " vs " +
             std::to_string(b.sample_rate()));
  if (a.size() != b.size())
    Fail(ErrorKind::kLengthMismatch,
         "lengths differ: " + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()) + " samples");
}

size_t DurationSamples(double ms, int sample_rate) {
  return static_cast<size_t>(std::llround(ms * sample_rate / 1000.0));
}

// Keeps only speech runs of at least `min_len` frames.
void DropShortRuns(std::vector<bool> *labels, size_t min_len) {
  auto &v = *labels;
  size_t t = 0;
  while (t < v.size()) {
    if (!v[t]) {
      t++;
      continue;
    }
    size_t end = t;
    while (end < v.size() && v[end]) end++;
    if (end - t < min_len) std::fill(v.begin() + t, v.begin() + end, false);
    t = end;
  }
}

}  // namespace

MixResult DryWetMix(const Waveform &noisy, const Waveform &enhanced,
                    const DryWetConfig &cfg) {
  if (!(cfg.dry >= 0.0 && cfg.dry <= 1.0))
    Fail(ErrorKind::kInvalidConfig, "dry must be in [0, 1]");
  CheckSameShape(noisy, enhanced);
  const auto x = noisy.samples(), y = enhanced.samples();
  std::vector<double> out(x.size());
  size_t clipped = 0;
  for (size_t i = 0; i < x.size(); i++) {
    const double v = cfg.dry * x[i] + (1.0 - cfg.dry) * y[i];
    if (v > 1.0 || v < -1.0) clipped++;
    out[i] = std::clamp(v, -1.0, 1.0);
  }
  return {Waveform(std::move(out), noisy.sample_rate()), clipped};
}

void VadConfig::Validate() const {
  if (aggressiveness < 0 || aggressiveness > 3)
    Fail(ErrorKind::kInvalidConfig,
         "VAD aggressiveness must be 0..3, got " + std::to_string(aggressiveness));
  if (!(frame_ms > 0.0)) Fail(ErrorKind::kInvalidConfig, "frame_ms must be > 0");
  if (!std::isfinite(energy_threshold_db))
    Fail(ErrorKind::kInvalidConfig, "energy threshold must be finite");
}

size_t FrameLabels::CountSpeech() const {
  return static_cast<size_t>(std::count(speech.begin(), speech.end(), true));
}

size_t FrameSamples(double frame_ms, int sample_rate) {
  return std::max<size_t>(1, DurationSamples(frame_ms, sample_rate));
}

bool IsVadSampleRate(int sample_rate) {
  switch (sample_rate) {
    case 8000: case 16000: case 22050: case 44100: case 48000: return true;
    default: return false;
  }
}

FrameLabels VadLabel(const Waveform &wave, const VadConfig &cfg) {
  cfg.Validate();
  if (wave.empty()) Fail(ErrorKind::kEmptySignal, "VAD of an empty signal");
  if (!IsVadSampleRate(wave.sample_rate()))
    Fail(ErrorKind::kInvalidRate,
         "VAD supports 8k/16k/22.05k/44.1k/48k; resample " +
             std::to_string(wave.sample_rate()) + " Hz input first");
  const auto x = wave.samples();
  const size_t frame = FrameSamples(cfg.frame_ms, wave.sample_rate());
  const size_t num_frames = (x.size() + frame - 1) / frame;
  const double threshold = std::pow(10.0, cfg.energy_threshold_db / 10.0);

  std::vector<bool> raw(num_frames);
  for (size_t t = 0; t < num_frames; t++) {
    const size_t begin = t * frame, end = std::min(x.size(), begin + frame);
    double energy = 0.0;
    for (size_t i = begin; i < end; i++) energy += x[i] * x[i];
    raw[t] = energy / (end - begin) > threshold;
  }

  std::vector<bool> labels = raw;
  for (int level = 1; level <= cfg.aggressiveness; level++) {
    const size_t half = static_cast<size_t>(level);
    for (size_t t = 0; t < num_frames; t++) {
      const size_t lo = t >= half ? t - half : 0;
      const size_t hi = std::min(num_frames - 1, t + half);
      size_t votes = 0;
      for (size_t k = lo; k <= hi; k++) votes += raw[k] ? 1 : 0;
      const bool majority = 2 * votes > hi - lo + 1;
      labels[t] = labels[t] && majority;
    }
    DropShortRuns(&labels, static_cast<size_t>(level) + 1);
  }
  return {std::move(labels), cfg.frame_ms};
}

Waveform TrimAndCompress(const Waveform &wave, const FrameLabels &labels,
                         const SilencePolicy &policy) {
  if (!(policy.max_internal_silence_ms > 0.0))
    Fail(ErrorKind::kInvalidConfig, "max_internal_silence_ms must be > 0");
  const auto x = wave.samples();
  const size_t frame = FrameSamples(labels.frame_ms, wave.sample_rate());
  const size_t expected = (x.size() + frame - 1) / frame;
  if (labels.size() != expected)
    Fail(ErrorKind::kLengthMismatch,
         "labels have " + std::to_string(labels.size()) +
             " frames, signal needs " + std::to_string(expected));
  const auto &speech = labels.speech;
  const auto first = std::find(speech.begin(), speech.end(), true);
  if (first == speech.end())
    Fail(ErrorKind::kAllSilence, "no speech frames; utterance should be dropped");
  const size_t first_frame = static_cast<size_t>(first - speech.begin());
  const size_t last_frame =
      speech.size() - 1 -
      static_cast<size_t>(std::find(speech.rbegin(), speech.rend(), true) -
                          speech.rbegin());

  const size_t max_silence =
      DurationSamples(policy.max_internal_silence_ms, wave.sample_rate());
  std::mt19937_64 rng(policy.seed);
  std::normal_distribution<double> noise(
      0.0, std::pow(10.0, policy.comfort_noise_level_db / 20.0));

  std::vector<double> out;
  out.reserve(x.size());
  size_t t = first_frame;
  while (t <= last_frame) {
    size_t end = t;
    while (end <= last_frame && speech[end] == speech[t]) end++;
    const size_t begin_sample = t * frame;
    const size_t end_sample = std::min(x.size(), end * frame);
    if (!speech[t] && end_sample - begin_sample > max_silence) {
      for (size_t i = 0; i < max_silence; i++)
        out.push_back(policy.fill == SilenceFill::kZeros
                          ? 0.0
                          : std::clamp(noise(rng), -1.0, 1.0));
    } else {
      out.insert(out.end(), x.begin() + begin_sample, x.begin() + end_sample);
    }
    t = end;
  }
  return Waveform(std::move(out), wave.sample_rate());
}

double EstimateSnr(const Waveform &noisy, const Waveform &enhanced) {
  CheckSameShape(noisy, enhanced);
  const auto x = noisy.samples(), y = enhanced.samples();
  double signal = 0.0, residual = 0.0;
  for (size_t i = 0; i < x.size(); i++) {
    const double n = x[i] - y[i];
    signal += y[i] * y[i];
    residual += n * n;
  }
  if (signal == 0.0) return -std::numeric_limits<double>::infinity();
  if (residual == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / residual);
}

Waveform NormalizeVolume(const Waveform &wave, double target_peak) {
  if (!(target_peak > 0.0 && std::isfinite(target_peak)))
    Fail(ErrorKind::kInvalidConfig, "target peak must be positive");
  const double peak = wave.Peak();
  if (peak == 0.0) Fail(ErrorKind::kAllZero, "cannot normalize a silent signal");
  const double gain = target_peak / peak;
  std::vector<double> out(wave.samples().begin(), wave.samples().end());
  for (double &s : out) s *= gain;
  return Waveform(std::move(out), wave.sample_rate());
}

}  // namespace ttskit
