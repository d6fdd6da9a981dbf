// Counter-based pseudo-random generator (Philox4x64-10).
//
// Every consumer of randomness in this project draws from a stream
// identified by (seed, stream). Streams are statistically independent and
// a draw depends only on (seed, stream, position), so work items keyed by
// stream index can run in any order and still produce identical output.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace cameo {

class Philox {
  public:
    using result_type = std::uint64_t;

    Philox(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }

    result_type operator()() {
        if (pos_ == 4) refill();
        return block_[pos_++];
    }

    // One-shot evaluation: first output word of the block keyed by
    // (seed, stream) at the given counter position.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
        std::array<std::uint64_t, 4> ctr{counter, 0, 0, 0};
        std::array<std::uint64_t, 2> key{seed, stream};
        for (int r = 0; r < 10; ++r) round(ctr, key);
        return ctr[0];
    }

    // Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n > 0. Multiply-shift bounding.
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>((*this)()) * n) >> 64);
    }

  private:
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static void round(std::array<std::uint64_t, 4>& ctr, std::array<std::uint64_t, 2>& key) {
        const auto prod0 = static_cast<unsigned __int128>(kMul0) * ctr[0];
        const auto prod1 = static_cast<unsigned __int128>(kMul1) * ctr[2];
        const auto hi0 = static_cast<std::uint64_t>(prod0 >> 64);
        const auto lo0 = static_cast<std::uint64_t>(prod0);
        const auto hi1 = static_cast<std::uint64_t>(prod1 >> 64);
        const auto lo1 = static_cast<std::uint64_t>(prod1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }

    void refill() {
        std::array<std::uint64_t, 4> ctr = counter_;
        std::array<std::uint64_t, 2> key = key_;
        for (int r = 0; r < 10; ++r) round(ctr, key);
        block_ = ctr;
        if (++counter_[0] == 0) ++counter_[1];
        pos_ = 0;
    }

    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
    std::array<std::uint64_t, 4> block_{};
    int pos_ = 4;
};

// Deterministic seed derivation for sub-experiments: one Philox block keyed
// by (seed, tag) at counter position `index`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return Philox::at(seed, tag, index);
}

}  // namespace cameo
