#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ideasim {

// SplitMix64 output finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// n-th output of the SplitMix64 stream started at `seed` (counter form,
// no state needed).
inline std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t n) {
    return mix64(seed + (n + 1) * 0x9E3779B97F4A7C15ull);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

// Sub-seed derivation contract: every seed used anywhere in a run is
//   splitmix_at(master_seed ^ fnv1a64(role), index)
// for a fixed role tag and index. Pre-deriving per-task seeds this way is
// what makes replicate-level parallelism reproducible.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view role,
                                 std::uint64_t index = 0) {
    return splitmix_at(master_seed ^ fnv1a64(role), index);
}

inline double u01_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Keyed uniform draw in [0,1), a pure function of (key, counter). Used for
// lazily materialized individual utility noise: the value for idea v is
// fixed by (agent_seed, v) alone, never by evaluation order.
inline double keyed_u01(std::uint64_t key, std::uint64_t counter) {
    return u01_from_bits(splitmix_at(key, counter));
}

// Seeded stream with explicit, platform-independent draw algorithms.
// std::mt19937_64 output is fully specified by the standard; the uniform
// helpers below avoid std::*_distribution, whose mappings are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0,1), 53-bit resolution.
    double u01() { return u01_from_bits(next_u64()); }

    // Unbiased uniform integer in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t q = UINT64_MAX / bound;
        const std::uint64_t span = q * bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r < span) return r % bound;
        }
    }

    std::size_t index(std::size_t size) {
        return static_cast<std::size_t>(below(static_cast<std::uint64_t>(size)));
    }

    bool bernoulli(double p) { return u01() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace ideasim
