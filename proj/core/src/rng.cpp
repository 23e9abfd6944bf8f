// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/rng.hpp"

namespace oco {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kInit = 0xA0761D6478BD642FULL;
}  // namespace

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t repetition, std::string_view purpose)
    : state_(mix64(mix64(mix64(seed ^ kInit) ^ (repetition + 1) * kGolden) ^ fnv1a64(purpose))) {}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % n;
}

}  // namespace oco
