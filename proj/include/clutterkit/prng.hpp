#pragma once

#include <cstdint>

namespace clutterkit {

// SplitMix64. The exact update rule is part of the interface contract:
// generated instances must be reproducible from (family, parameters, seed)
// alone, on any platform, so the generator is pinned here instead of
// delegated to the standard library.
//
//   state <- state + 0x9E3779B97F4A7C15                 (mod 2^64)
//   z <- state
//   z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9         (mod 2^64)
//   z <- (z xor (z >> 27)) * 0x94D049BB133111EB         (mod 2^64)
//   output z xor (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Draw in [0, bound) by modulo reduction; bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Seed for retry attempt t (0-based): the (t+1)-th output of a fresh stream
// seeded with the caller's seed, so attempts are decoupled but reproducible.
inline std::uint64_t derive_subseed(std::uint64_t seed, int attempt) {
    SplitMix64 g(seed);
    std::uint64_t s = 0;
    for (int i = 0; i <= attempt; ++i) s = g.next();
    return s;
}

}  // namespace clutterkit
