// src/fft.h

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

#ifndef TTSKIT_SRC_FFT_H_
#define TTSKIT_SRC_FFT_H_

#include <complex>
#include <span>

namespace ttskit::internal {

// Real <-> half-complex transforms of size n backed by FFTW. Plans are created
// once per size under a lock and then executed on caller-owned buffers, so
// concurrent calls are safe. Inverse is unnormalized (scaled by n).
void ForwardRealFft(std::span<const double> in,
                    std::span<std::complex<double>> out);
void InverseRealFft(std::span<const std::complex<double>> in,
                    std::span<double> out);

}  // namespace ttskit::internal

#endif  // TTSKIT_SRC_FFT_H_
