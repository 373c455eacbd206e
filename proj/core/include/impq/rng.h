// Copyright 2026 The imprecise-q Authors
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

#ifndef IMPQ_RNG_H
#define IMPQ_RNG_H

#include <cstdint>
#include <random>

namespace impq {

/// The splitmix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Published seed-derivation rule: the stream seed for `index` under `master`.
///
///     mix_seed(m, i) = splitmix64(splitmix64(m) ^ (i * 0x9E3779B97F4A7C15 + 0xD1B54A32D192ED03))
///
/// Each index gets its own stream, so growing a trial count never reshuffles
/// the streams of earlier trials.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ (index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

/// Maps a 64-bit word onto [0, 1) using its top 53 bits.
constexpr double unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Domain tags keep the streams used for different purposes apart even when
/// they share a master seed and trial index.
enum class StreamTag : std::uint64_t {
    kMeasurement = 0x6d656173ULL,
    kGateNoise = 0x6e6f6973ULL,
    kInputNoise = 0x696e7074ULL,
    kBaseChoice = 0x62617365ULL,
};

constexpr std::uint64_t stream_seed(std::uint64_t master, StreamTag tag, std::uint64_t trial) {
    return mix_seed(master ^ static_cast<std::uint64_t>(tag), trial);
}

/// Per-trial random stream. Never shared between trials.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return unit_interval(engine_()); }

    double normal() { return normal_(engine_); }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
    }

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace impq

#endif
