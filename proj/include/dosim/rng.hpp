#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace dosim {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A stream is keyed by (seed, stream_id); draws are a pure function of
// the key and the internal 64-bit draw counter, so trial streams can be
// created independently on any worker thread and always produce the
// same sequence.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)},
          counter_{0, 0,
                   static_cast<std::uint32_t>(stream_id),
                   static_cast<std::uint32_t>(stream_id >> 32)} {}

    std::uint32_t next_u32() {
        if (buffered_ == 0) {
            block_ = round10(counter_, key_);
            buffered_ = 4;
            if (++counter_[0] == 0) ++counter_[1];
        }
        return block_[4 - buffered_--];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    // Uniform on (0, 1]; never returns 0 so log() is always finite.
    double next_uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal pair via Box-Muller.
    std::array<double, 2> next_normal_pair() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b, std::uint32_t& lo) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        lo = static_cast<std::uint32_t>(p);
        return static_cast<std::uint32_t>(p >> 32);
    }

    static std::array<std::uint32_t, 4> round10(std::array<std::uint32_t, 4> ctr,
                                                std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
        constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
        constexpr std::uint32_t kMul0 = 0xD2511F53u;
        constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t lo0, lo1;
            const std::uint32_t hi0 = mulhi(kMul0, ctr[0], lo0);
            const std::uint32_t hi1 = mulhi(kMul1, ctr[2], lo1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int buffered_ = 0;
};

}  // namespace dosim
