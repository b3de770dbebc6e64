#pragma once

#include <cstdint>
#include <random>

namespace okamoto {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent mt19937_64 stream number `index` of a run seeded with `seed`.
/// Streams depend only on (seed, index), so work can be split across
/// threads in any order.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

/// Uniform double in [0,1) from the top 53 bits.
inline double uniform_unit(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Uniform ternary digits: each accepted 64-bit word below 3^40 yields 40
/// independent digits.
class TernaryDigitSource {
public:
    explicit TernaryDigitSource(std::mt19937_64& engine) : engine_(engine) {}

    std::uint8_t next() {
        if (remaining_ == 0) {
            do {
                word_ = engine_();
            } while (word_ >= kPow3_40);
            remaining_ = 40;
        }
        const auto digit = static_cast<std::uint8_t>(word_ % 3);
        word_ /= 3;
        --remaining_;
        return digit;
    }

private:
    static constexpr std::uint64_t kPow3_40 = 12157665459056928801ULL;
    std::mt19937_64& engine_;
    std::uint64_t word_ = 0;
    int remaining_ = 0;
};

}  // namespace okamoto
