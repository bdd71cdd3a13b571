// src/cli/common.cc

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

#include "common.h"

#include <cstdio>
#include <filesystem>

#include "ttskit/corpus.h"
#include "ttskit/resample.h"

namespace ttskit::cli {

Waveform LoadAudio(const std::string &path, int sample_rate) {
  Waveform wave = ReadWav(path);
  if (wave.sample_rate() != sample_rate) wave = Resample(wave, sample_rate);
  return wave;
}

std::string ResolveAudioPath(const std::string &manifest_path,
                             const std::string &audio) {
  const std::filesystem::path p(audio);
  if (p.is_absolute()) return audio;
  return (std::filesystem::path(manifest_path).parent_path() / p).string();
}

std::string FileStem(std::string_view id) {
  std::string stem(id);
  for (char &c : stem)
    if (c == '/' || c == '\\' || c == ':') c = '_';
  return stem;
}

uint64_t Fnv1a(std::string_view text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string FormatOptional(const std::optional<double> &value) {
  return value ? FormatNumber(*value) : "";
}

std::string FormatHours(double hours) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", hours);
  return buf;
}

void LogWarning(std::ostream &log, const std::string &message) {
  log << "WARNING: " << message << '\n';
}

}  // namespace ttskit::cli
