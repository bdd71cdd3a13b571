// include/ttskit/parallel.h

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

#ifndef TTSKIT_PARALLEL_H_
#define TTSKIT_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ttskit {

/// Worker count to use when the caller does not pick one.
inline int DefaultWorkers() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Evaluates fn(0..n-1) on up to `workers` threads and returns the results in
/// index order, so output is independent of scheduling. fn must not throw.
template <typename Fn>
auto ParallelMap(size_t n, int workers, Fn fn)
    -> std::vector<decltype(fn(size_t{}))> {
  using Result = decltype(fn(size_t{}));
  std::vector<Result> results(n);
  const size_t num_threads =
      std::min(n, static_cast<size_t>(std::max(1, workers)));
  if (num_threads <= 1) {
    for (size_t i = 0; i < n; i++) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(num_threads);
    for (size_t w = 0; w < num_threads; w++) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < n; i = next++) results[i] = fn(i);
      });
    }
  }
  return results;
}

}  // namespace ttskit

#endif  // TTSKIT_PARALLEL_H_
