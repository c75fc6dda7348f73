// Copyright 2026 The qwit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Seeded random number helpers.
 *
 * The standard distributions (`std::uniform_real_distribution`,
 * `std::shuffle`, ...) are implementation defined, so every draw that ends up
 * in a persisted artifact goes through the helpers below. Combined with
 * `std::mt19937_64`, whose output sequence is fixed by the standard, this keeps
 * datasets and training runs identical across standard libraries.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace qwit {

/// Seed for every stochastic routine in the library.
struct RngSeed {
    std::uint64_t value{0};

    friend bool operator==(RngSeed, RngSeed) = default;
};

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent child seeds.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

/// Child seed for stream `stream` of `parent`.
[[nodiscard]] constexpr RngSeed derive_seed(RngSeed parent,
                                            std::uint64_t stream) noexcept {
    return RngSeed{splitmix64(parent.value ^ splitmix64(stream + 1))};
}

[[nodiscard]] inline Rng make_rng(RngSeed seed) { return Rng{seed.value}; }

/// Uniform double in [0, 1) with 53 random bits.
[[nodiscard]] inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

[[nodiscard]] inline double uniform(Rng &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, bound), rejection sampled.
[[nodiscard]] inline std::uint64_t uniform_below(Rng &rng,
                                                 std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) {
        draw = rng();
    }
    return draw % bound;
}

/// Standard normal deviate (Box-Muller, one value per call).
[[nodiscard]] inline double standard_normal(Rng &rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) {
        u1 = uniform01(rng);
    }
    const double u2 = uniform01(rng);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

/// In-place Fisher-Yates shuffle.
template <class T> void shuffle(std::span<T> items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// `count` distinct elements of `pool`, drawn without replacement, in draw
/// order.
template <class T>
[[nodiscard]] std::vector<T> sample_without_replacement(std::vector<T> pool,
                                                        std::size_t count,
                                                        Rng &rng) {
    if (count > pool.size()) {
        count = pool.size();
    }
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(
                               uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

} // namespace qwit
