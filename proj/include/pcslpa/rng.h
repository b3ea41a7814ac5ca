// Copyright 2026 The pcslpa Authors
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

#ifndef PCSLPA_RNG_H_
#define PCSLPA_RNG_H_

#include <cstdint>
#include <random>

namespace pcslpa {

// Every run owns its stream; nothing in the library touches global state.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent child seed for a named sub-stream of `seed`.
constexpr uint64_t SubstreamSeed(uint64_t seed, uint64_t stream) {
  return MixBits(seed ^ MixBits(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace pcslpa

#endif  // PCSLPA_RNG_H_
