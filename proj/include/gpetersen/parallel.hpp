// Copyright 2026 The gpetersen Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// OpenMP helpers shared by the parallel kernels. Every kernel that uses these
// has a serial twin in a `reference` namespace; tests compare the two.

#ifndef GPETERSEN_PARALLEL_HPP_
#define GPETERSEN_PARALLEL_HPP_

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <vector>

namespace gpetersen {

inline int MaxThreads() { return omp_get_max_threads(); }

// Runs body(i) for i in [0, count) with dynamic scheduling. Exceptions do not
// cross the OpenMP region; the one thrown at the lowest index is rethrown.
template <class Body>
void ParallelFor(std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Results are written by index, so the output order never depends on
// scheduling.
template <class Result, class Body>
std::vector<Result> ParallelMap(std::size_t count, Body&& body) {
  std::vector<Result> out(count);
  ParallelFor(count, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

// Lowest index i in [0, count) for which pred(i) holds, or count. Indices
// above the best hit found so far are skipped, which keeps the answer equal
// to the serial first-match.
template <class Pred>
std::size_t ParallelFindFirst(std::size_t count, Pred&& pred) {
  std::atomic<std::size_t> best{count};
  ParallelFor(count, [&](std::size_t i) {
    if (i >= best.load(std::memory_order_relaxed)) return;
    if (!pred(i)) return;
    std::size_t current = best.load();
    while (i < current && !best.compare_exchange_weak(current, i)) {
    }
  });
  return best.load();
}

}  // namespace gpetersen

#endif  // GPETERSEN_PARALLEL_HPP_
