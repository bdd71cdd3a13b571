// src/error.cc

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

#include "ttskit/error.h"

namespace ttskit {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptySignal: return "EmptySignal";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kInvalidRate: return "InvalidRate";
    case ErrorKind::kEmptySequence: return "EmptySequence";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kFrameRateMismatch: return "FrameRateMismatch";
    case ErrorKind::kNoCovoicedFrames: return "NoCovoicedFrames";
    case ErrorKind::kEmptyTrack: return "EmptyTrack";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kRateMismatch: return "RateMismatch";
    case ErrorKind::kEmptyReference: return "EmptyReference";
    case ErrorKind::kAllSilence: return "AllSilence";
    case ErrorKind::kAllZero: return "AllZero";
    case ErrorKind::kIo: return "Io";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kFormat: return "FormatError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

void Fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

}  // namespace ttskit
