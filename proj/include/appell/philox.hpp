#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
// A (counter, key) pair maps to four independent 32-bit words, so any
// sample can be regenerated from its index alone.

#include <array>
#include <cmath>
#include <cstdint>

namespace appell {

class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Uniform double in the open interval (0, 1) from two words.  52 bits
/// plus a half step keep both ends strictly inside the interval.
inline double uniform_open(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (std::uint64_t{hi >> 6} << 26) | (lo >> 6);
    return (static_cast<double>(bits) + 0.5) / 4503599627370496.0;
}

/// The random stream of one sample: block k of sample i is
/// Philox(counter = {i_lo, i_hi, k, 0}, key = seed).
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_(index) {}

    Philox4x32::Counter next_block() {
        return Philox4x32::generate(
            {static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32), block_++, 0u}, key_);
    }

    double uniform() {
        const auto b = next_block();
        return uniform_open(b[0], b[1]);
    }

    /// Box-Muller on one block.
    double normal() {
        const auto b = next_block();
        const double u1 = uniform_open(b[0], b[1]);
        const double u2 = uniform_open(b[2], b[3]);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    Philox4x32::Key key_;
    std::uint64_t index_;
    std::uint32_t block_ = 0;
};

} // namespace appell
