// Deterministic, stream-split random number generation for the benchmark
// harness.
// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace oco {

/// SplitMix64 (Steele, Lea & Flood). Counter-based: the i-th output is a pure
/// function mix(key + i * GOLDEN), so draws are reproducible across platforms
/// and independent of call-site interleaving once streams are separated.
///
/// Stream-splitting rule: a stream is keyed by
///   key = mix(mix(mix(seed ^ INIT) ^ (rep+1) * GOLDEN) ^ fnv1a64(purpose))
/// so every (seed, repetition, purpose-tag) triple yields an independent
/// stream. Within a stream, draw order is documented by each consumer.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t key) : state_(key) {}

    /// Stream constructor per the splitting rule above.
    SplitMix64(std::uint64_t seed, std::uint64_t repetition, std::string_view purpose);

    std::uint64_t next();

    /// Uniform double in [0, 1) with 53 significant bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Unbiased integer in [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view s);

/// SplitMix64 finalizer (a strong 64-bit mixer in its own right).
std::uint64_t mix64(std::uint64_t z);

}  // namespace oco
