// src/pitch.cc

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

#include "ttskit/pitch.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include "fft.h"
#include "ttskit/error.h"

namespace ttskit {

void PitchConfig::Validate(int sample_rate) const {
  if (!(f0_min > 0.0 && f0_min < f0_max && f0_max < sample_rate / 2.0))
    Fail(ErrorKind::kInvalidConfig,
         "need 0 < f0_min < f0_max < rate/2, got f0_min=" +
             std::to_string(f0_min) + " f0_max=" + std::to_string(f0_max) +
             " at " + std::to_string(sample_rate) + " Hz");
  if (hop_length <= 0 || hop_length > frame_length)
    Fail(ErrorKind::kInvalidConfig, "need 0 < hop_length <= frame_length");
  if (!(voicing_threshold > 0.0 && voicing_threshold < 1.0))
    Fail(ErrorKind::kInvalidConfig, "voicing_threshold must be in (0, 1)");
  const int max_lag = static_cast<int>(std::ceil(sample_rate / f0_min));
  if (frame_length <= max_lag + 1)
    Fail(ErrorKind::kInvalidConfig,
         "frame_length " + std::to_string(frame_length) +
             " too short for f0_min " + std::to_string(f0_min) + " Hz (lag " +
             std::to_string(max_lag) + ")");
}

namespace {

size_t ReflectIndex(long long i, size_t n) {
  if (n == 1) return 0;
  const long long period = 2 * static_cast<long long>(n - 1);
  long long m = i % period;
  if (m < 0) m += period;
  if (m >= static_cast<long long>(n)) m = period - m;
  return static_cast<size_t>(m);
}

// Working buffers for one YIN frame; reused across frames.
class YinFrame {
 public:
  YinFrame(int frame_length, int max_lag)
      : frame_length_(frame_length),
        max_lag_(max_lag),
        window_(frame_length - max_lag),
        fft_size_(std::bit_ceil(static_cast<size_t>(frame_length))),
        a_(fft_size_, 0.0),
        b_(fft_size_, 0.0),
        spec_a_(fft_size_ / 2 + 1),
        spec_b_(fft_size_ / 2 + 1),
        corr_(fft_size_),
        cmnd_(max_lag + 1) {}

  // Fills cmnd_[0..max_lag] for the frame in b_[0..frame_length).
  void ComputeCmnd() {
    std::copy(b_.begin(), b_.begin() + window_, a_.begin());
    std::fill(a_.begin() + window_, a_.end(), 0.0);
    internal::ForwardRealFft(a_, spec_a_);
    internal::ForwardRealFft(b_, spec_b_);
    for (size_t k = 0; k < spec_a_.size(); k++)
      spec_b_[k] *= std::conj(spec_a_[k]);
    internal::InverseRealFft(spec_b_, corr_);

    // Energy of b over the sliding window [tau, tau + window).
    double energy_tau = 0.0;
    for (int j = 0; j < window_; j++) energy_tau += b_[j] * b_[j];
    const double energy_0 = energy_tau;
    cmnd_[0] = 1.0;
    double running = 0.0;
    for (int tau = 1; tau <= max_lag_; tau++) {
      energy_tau += b_[tau + window_ - 1] * b_[tau + window_ - 1] -
                    b_[tau - 1] * b_[tau - 1];
      const double r = corr_[tau] / static_cast<double>(fft_size_);
      const double diff = std::max(0.0, energy_0 + energy_tau - 2.0 * r);
      running += diff;
      cmnd_[tau] = running > 0.0 ? diff * tau / running : 1.0;
    }
  }

  std::span<double> frame() { return {b_.data(), static_cast<size_t>(frame_length_)}; }
  const std::vector<double> &cmnd() const { return cmnd_; }

 private:
  int frame_length_;
  int max_lag_;
  int window_;
  size_t fft_size_;
  std::vector<double> a_, b_;
  std::vector<std::complex<double>> spec_a_, spec_b_;
  std::vector<double> corr_;
  std::vector<double> cmnd_;
};

}  // namespace

PitchTrack ExtractPitch(const Waveform &wave, const PitchConfig &cfg) {
  if (wave.empty()) Fail(ErrorKind::kEmptySignal, "pitch of an empty signal");
  const int rate = wave.sample_rate();
  cfg.Validate(rate);
  const int min_lag = std::max(2, static_cast<int>(std::floor(rate / cfg.f0_max)));
  const int max_lag = static_cast<int>(std::ceil(rate / cfg.f0_min));

  const auto samples = wave.samples();
  const size_t n = samples.size();
  const size_t pad = cfg.frame_length / 2;
  const size_t num_frames = 1 + (n + 2 * pad - cfg.frame_length) / cfg.hop_length;

  PitchTrack track;
  track.f0.assign(num_frames, 0.0);
  track.voiced.assign(num_frames, false);
  track.frame_rate = static_cast<double>(rate) / cfg.hop_length;

  YinFrame yin(cfg.frame_length, max_lag);
  for (size_t t = 0; t < num_frames; t++) {
    const long long start = static_cast<long long>(t) * cfg.hop_length -
                            static_cast<long long>(pad);
    auto frame = yin.frame();
    for (int k = 0; k < cfg.frame_length; k++)
      frame[k] = samples[ReflectIndex(start + k, n)];
    yin.ComputeCmnd();
    const auto &d = yin.cmnd();

    int tau = -1;
    for (int lag = min_lag; lag <= max_lag; lag++) {
      if (d[lag] < cfg.voicing_threshold) {
        while (lag + 1 <= max_lag && d[lag + 1] < d[lag]) lag++;
        tau = lag;
        break;
      }
    }
    if (tau < 0) continue;

    double refined = tau;
    if (tau > 1 && tau < max_lag) {
      const double curvature = d[tau - 1] - 2.0 * d[tau] + d[tau + 1];
      if (curvature > 0.0)
        refined = tau + 0.5 * (d[tau - 1] - d[tau + 1]) / curvature;
    }
    const double f0 = rate / refined;
    if (f0 >= cfg.f0_min && f0 <= cfg.f0_max) {
      track.f0[t] = f0;
      track.voiced[t] = true;
    }
  }
  return track;
}

AlignedTracks AlignTracks(const PitchTrack &ref, const PitchTrack &hyp) {
  if (ref.empty() || hyp.empty())
    Fail(ErrorKind::kEmptyTrack, "cannot align an empty pitch track");
  if (ref.frame_rate != hyp.frame_rate)
    Fail(ErrorKind::kFrameRateMismatch,
         "frame rates differ: " + std::to_string(ref.frame_rate) + " vs " +
             std::to_string(hyp.frame_rate));
  const size_t shorter = std::min(ref.size(), hyp.size());
  const size_t longer = std::max(ref.size(), hyp.size());
  AlignedTracks out{ref, hyp, std::nullopt};
  for (PitchTrack *track : {&out.ref, &out.hyp}) {
    track->f0.resize(shorter);
    track->voiced.resize(shorter);
  }
  if (static_cast<double>(longer - shorter) > 0.1 * static_cast<double>(longer))
    out.warning = "pitch track lengths differ by more than 10% (" +
                  std::to_string(ref.size()) + " vs " +
                  std::to_string(hyp.size()) + " frames); truncated to " +
                  std::to_string(shorter);
  return out;
}

void WritePitchTrackTsv(std::ostream &out, const PitchTrack &track) {
  out << "frame_index\tf0_hz\tvoiced\n";
  char buf[64];
  for (size_t t = 0; t < track.size(); t++) {
    std::snprintf(buf, sizeof(buf), "%.6f", track.f0[t]);
    out << t << '\t' << buf << '\t' << (track.voiced[t] ? 1 : 0) << '\n';
  }
}

}  // namespace ttskit
