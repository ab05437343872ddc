// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace simsim {

/// Seeded generator with a portable uniform-int sampler. std::mt19937_64 is
/// bit-exact everywhere; std::uniform_int_distribution is not, so sampling
/// is done by rejection here to keep outputs reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(eng_()); // full range
        std::uint64_t limit = (UINT64_MAX / span) * span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Derives an independent child seed (for parallel or nested use).
    std::uint64_t fork_seed() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace simsim
