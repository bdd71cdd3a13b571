// src/cli/common.h

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

#ifndef TTSKIT_SRC_CLI_COMMON_H_
#define TTSKIT_SRC_CLI_COMMON_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ttskit/waveform.h"

namespace ttskit::cli {

/// Reads a WAV file and resamples it to `sample_rate` when needed.
Waveform LoadAudio(const std::string &path, int sample_rate);

/// Audio paths in a manifest are relative to the manifest's directory.
std::string ResolveAudioPath(const std::string &manifest_path,
                             const std::string &audio);

/// File-name-safe form of an utterance id.
std::string FileStem(std::string_view id);

/// Stable 64-bit FNV-1a hash; used to derive per-utterance seeds.
uint64_t Fnv1a(std::string_view text);

std::string FormatOptional(const std::optional<double> &value);

/// Fixed-point hours with four decimals.
std::string FormatHours(double hours);

void LogWarning(std::ostream &log, const std::string &message);

}  // namespace ttskit::cli

#endif  // TTSKIT_SRC_CLI_COMMON_H_
