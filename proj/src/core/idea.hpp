#pragma once

#include <bit>
#include <cstdint>

namespace ideasim {

// Candidate solution: an M-bit word, one bit per problem aspect. The word
// value doubles as the canonical integer encoding in [0, 2^M).
struct Idea {
    std::uint64_t bits = 0;

    friend bool operator==(const Idea&, const Idea&) = default;
};

inline constexpr int kMaxAspects = 63;  // encodings live in a uint64_t

inline std::uint64_t space_size(int aspects) {
    return std::uint64_t{1} << aspects;
}

inline int hamming(Idea a, Idea b) {
    return std::popcount(a.bits ^ b.bits);
}

}  // namespace ideasim
