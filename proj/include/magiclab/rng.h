// Copyright 2026 The magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGICLAB_RNG_H
#define MAGICLAB_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace magiclab {

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based stream seed: a pure function of the master seed and the task coordinates.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> coords) {
    uint64_t h = splitmix64(master);
    for (uint64_t c : coords) {
        h = splitmix64(h ^ splitmix64(c + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every standard library.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng &rng, double p) {
    return uniform01(rng) < p;
}

inline bool coin(Rng &rng) {
    return rng() >> 63;
}

inline uint64_t uniform_index(Rng &rng, uint64_t bound) {
    // Lemire multiply-shift with rejection.
    uint64_t threshold = (0 - bound) % bound;
    while (true) {
        uint64_t r = rng();
        unsigned __int128 m = static_cast<unsigned __int128>(r) * bound;
        if (static_cast<uint64_t>(m) >= threshold) {
            return static_cast<uint64_t>(m >> 64);
        }
    }
}

}  // namespace magiclab

#endif
