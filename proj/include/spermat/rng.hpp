#pragma once

#include <cstdint>
#include <vector>

namespace spermat {

/// SplitMix64 (Vigna). 64-bit state, 64-bit output, period 2^64; the stream
/// is byte-identical on every platform. Bounded draws use rejection sampling
/// rather than an implementation-defined distribution object.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from [0, bound). Rejection sampling: accept
    /// r >= 2^64 mod bound, so the accepted range is a whole multiple of bound.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Deterministic substream derivation: stream(seed, t) is decorrelated
    /// from stream(seed, t') for t != t'. Used for schedule-independent
    /// Monte Carlo (one substream per trial).
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0xA0761D6478BD642Full + index * 0xE7037ED1A0B428DBull));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

/// Fisher–Yates shuffle of the identity, 1-based image. Consumes exactly the
/// draws next_below(2), ..., next_below(n) in descending-index order.
std::vector<int> random_permutation_image(int n, SplitMix64& gen);

}  // namespace spermat
