// src/cli/commands.h

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

#ifndef TTSKIT_SRC_CLI_COMMANDS_H_
#define TTSKIT_SRC_CLI_COMMANDS_H_

#include <ostream>
#include <string>

#include "ttskit/cli.h"

namespace ttskit::cli {

struct VadCommandOptions {
  std::string wav;
  int level = 0;
  double threshold_db = -45.0;
  std::string labels_out;
  std::string trimmed_out;
};

struct SnrCommandOptions {
  std::string noisy;
  std::string enhanced;
};

struct VocodeCommandOptions {
  std::string input;
  std::string output;
  /// Where to dump the target magnitude spectrogram, if anywhere.
  std::string spec_out;
  bool roundtrip = false;
  bool random_phase = false;
  int n_iters = 32;
};

struct FilterCommandOptions {
  std::string manifest;
  std::string kept_out;
  std::string dropped_out;
  FilterConfig filter;
};

struct ReportCommandOptions {
  std::string manifest;
  std::string json_out;
};

// These throw ttskit::Error on failure; RunCli maps that to kExitRuntime.
int RunVad(const GlobalOptions &global, const VadCommandOptions &opts,
           std::ostream &out);
int RunSnr(const GlobalOptions &global, const SnrCommandOptions &opts,
           std::ostream &out);
int RunVocode(const GlobalOptions &global, const VocodeCommandOptions &opts,
              std::ostream &out);
int RunFilter(const FilterCommandOptions &opts, std::ostream &out);
int RunReport(const ReportCommandOptions &opts, std::ostream &out);

}  // namespace ttskit::cli

#endif  // TTSKIT_SRC_CLI_COMMANDS_H_
