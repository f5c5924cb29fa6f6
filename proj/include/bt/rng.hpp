#pragma once

#include <cstdint>
#include <random>

namespace bt {

// All randomness in the library flows through this engine type so that a
// (seed, call-site) pair pins every draw.
using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent seed streams from a base
// seed plus a stream index without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

} // namespace bt
