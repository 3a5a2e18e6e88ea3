// Copyright 2026 The ergse Authors.
//
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


#ifndef ERGSE_PARALLEL_HPP_
#define ERGSE_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "ergse/errors.hpp"

namespace ergse {

/// ERGSE_WORKERS if set to a positive integer, else the hardware count.
inline int default_workers() {
  if (const char* env = std::getenv("ERGSE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 4096) {
      return static_cast<int>(v);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Results must be
/// written by index; nothing else is shared. If tasks throw, the failure
/// with the lowest index is rethrown as GeometryError once all threads stop.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::size_t bad_index = std::numeric_limits<std::size_t>::max();
  std::string bad_what;

  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < bad_index) {
          bad_index = i;
          bad_what = e.what();
        }
        failed.store(true);
      }
    }
  };

  const std::size_t threads = std::min<std::size_t>(
      n, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw GeometryError(bad_index, bad_what);
}

}  // namespace ergse

#endif  // ERGSE_PARALLEL_HPP_
