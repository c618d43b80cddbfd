#pragma once

// Pinned pseudo-random number generator for the whole project: xoshiro256**
// (Blackman & Vigna) seeded through splitmix64. Every stochastic component
// derives its stream from a (seed, stream id) pair, so results are
// reproducible bit-for-bit across runs and platforms. The C++ standard
// distributions are deliberately avoided: their output is implementation
// defined.

#include <array>
#include <cstdint>

namespace eprb {

// Name recorded in reports so a data file can be traced to the generator.
inline constexpr const char* kRngName = "xoshiro256ss";

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

  private:
    std::uint64_t state_;
};

class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    // Stream `k` of a master seed. The (seed, k) pair is hashed before
    // expansion so streams with nearby ids do not overlap.
    static Xoshiro256ss for_stream(std::uint64_t seed, std::uint64_t k) {
        return Xoshiro256ss(mix64(seed) ^ mix64(0x9E3779B97F4A7C15ULL * (k + 1)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Fair +1/-1 from the top bit.
    int next_sign() { return (next() >> 63) ? -1 : +1; }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound); unbiased via rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        std::uint64_t v = next();
        while (v < threshold) v = next();
        return v % bound;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace eprb
