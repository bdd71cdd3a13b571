// src/fft.cc

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

#include "fft.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "ttskit/error.h"

namespace ttskit::internal {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

std::mutex plan_mutex;

const PlanPair &GetPlans(size_t n) {
  static std::map<size_t, PlanPair> plans;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = plans.find(n);
  if (it != plans.end()) return it->second;
  // Scratch buffers only exist for planning; execution uses the new-array API.
  std::vector<double> real(n);
  std::vector<fftw_complex> cplx(n / 2 + 1);
  int size = static_cast<int>(n);
  PlanPair p;
  p.forward = fftw_plan_dft_r2c_1d(size, real.data(), cplx.data(),
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.inverse = fftw_plan_dft_c2r_1d(size, cplx.data(), real.data(),
                                   FFTW_ESTIMATE | FFTW_UNALIGNED |
                                       FFTW_DESTROY_INPUT);
  if (p.forward == nullptr || p.inverse == nullptr)
    Fail(ErrorKind::kInvalidConfig, "FFTW planning failed");
  return plans.emplace(n, p).first->second;
}

}  // namespace

void ForwardRealFft(std::span<const double> in,
                    std::span<std::complex<double>> out) {
  const size_t n = in.size();
  if (out.size() != n / 2 + 1)
    Fail(ErrorKind::kDimensionMismatch, "FFT output size mismatch");
  const PlanPair &plans = GetPlans(n);
  // FFTW takes a non-const input pointer, but r2c without DESTROY_INPUT leaves
  // it intact.
  fftw_execute_dft_r2c(plans.forward, const_cast<double *>(in.data()),
                       reinterpret_cast<fftw_complex *>(out.data()));
}

void InverseRealFft(std::span<const std::complex<double>> in,
                    std::span<double> out) {
  const size_t n = out.size();
  if (in.size() != n / 2 + 1)
    Fail(ErrorKind::kDimensionMismatch, "IFFT input size mismatch");
  const PlanPair &plans = GetPlans(n);
  std::vector<std::complex<double>> scratch(in.begin(), in.end());
  fftw_execute_dft_c2r(plans.inverse,
                       reinterpret_cast<fftw_complex *>(scratch.data()),
                       out.data());
}

}  // namespace ttskit::internal
