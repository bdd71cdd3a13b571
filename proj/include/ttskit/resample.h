// include/ttskit/resample.h

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

#ifndef TTSKIT_RESAMPLE_H_
#define TTSKIT_RESAMPLE_H_

#include "ttskit/waveform.h"

namespace ttskit {

/// Band-limited resampling by direct windowed-sinc interpolation. The
/// low-pass cutoff sits just below the lower of the two Nyquist rates. Output
/// length is round(len * target_rate / sample_rate); equal rates return the
/// input unchanged.
Waveform Resample(const Waveform &wave, int target_rate);

}  // namespace ttskit

#endif  // TTSKIT_RESAMPLE_H_
