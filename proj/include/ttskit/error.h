// include/ttskit/error.h

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

#ifndef TTSKIT_ERROR_H_
#define TTSKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttskit {

enum class ErrorKind {
  kEmptySignal,
  kInvalidConfig,
  kInvalidRate,
  kEmptySequence,
  kDimensionMismatch,
  kFrameRateMismatch,
  kNoCovoicedFrames,
  kEmptyTrack,
  kLengthMismatch,
  kRateMismatch,
  kEmptyReference,
  kAllSilence,
  kAllZero,
  kIo,
  kParse,
  kFormat,
};

std::string_view ErrorKindName(ErrorKind kind);

/// All library failures are reported as an Error carrying a kind, so callers
/// can branch on the failure class (e.g. treat kAllSilence as "drop this
/// utterance") without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string &message);

}  // namespace ttskit

#endif  // TTSKIT_ERROR_H_
