#pragma once

#include <cstdint>

namespace jsrforge {

/// Counter-based splitmix64 stream. Each (seed, stream) pair yields an
/// independent, stateless-to-reproduce sequence, so parallel consumers can
/// draw per-index streams in any order and still agree bit for bit.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : state_(finalize(seed ^ finalize(stream + kGolden))) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        return finalize(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace jsrforge
