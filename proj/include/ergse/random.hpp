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


// Counter-derived random substreams. Task i of a run seeded with `seed`
// always sees the same generator, whatever the worker count.

#ifndef ERGSE_RANDOM_HPP_
#define ERGSE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace ergse {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(substream_seed(seed, index));
}

}  // namespace ergse

#endif  // ERGSE_RANDOM_HPP_
