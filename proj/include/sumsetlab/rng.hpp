#pragma once

// Seeded generator with a fully pinned-down output sequence.
// std::mt19937_64 itself is specified, but the standard distributions are
// not, so every randomized routine in the library derives its values from
// these helpers only. Identical seed => identical bytes, on any toolchain.

#include <cstdint>

namespace sumsetlab {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        // multiply-shift reduction with rejection of the biased tail
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (0 - bound) % bound) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    bool next_bit() { return next_u64() >> 63; }

private:
    std::uint64_t state_;
};

}  // namespace sumsetlab
