// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace gmr::detail {

/// Philox4x32-10 counter-based generator. A draw is fully determined by
/// (key, counter), so path streams derived from (seed, path index) are
/// independent of scheduling.
struct Philox4x32 {
    static constexpr std::uint32_t kW0 = 0x9E3779B9u;
    static constexpr std::uint32_t kW1 = 0xBB67AE85u;
    static constexpr std::uint32_t kM0 = 0xD2511F53u;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57u;

    struct Block {
        std::uint32_t v[4];
    };

    static Block generate(std::uint64_t key, std::uint64_t ctr_hi, std::uint64_t ctr_lo) {
        std::uint32_t c0 = static_cast<std::uint32_t>(ctr_lo);
        std::uint32_t c1 = static_cast<std::uint32_t>(ctr_lo >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(ctr_hi);
        std::uint32_t c3 = static_cast<std::uint32_t>(ctr_hi >> 32);
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c0;
            const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += kW0;
            k1 += kW1;
        }
        return {{c0, c1, c2, c3}};
    }
};

/// Uniform in (0, 1), 53-bit, never exactly 0 or 1.
inline double uniform01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

/// Inverse normal CDF, Wichura's AS241 (PPND16): relative error ~1e-15 in
/// the bulk, adequate everywhere the 53-bit uniforms reach.
double inverse_normal_cdf(double p);

/// Unit normal for (seed, path, step), scheduling-independent.
inline double normal_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t step) {
    const auto b = Philox4x32::generate(seed, path, step);
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(b.v[0]) << 32) | b.v[1];
    return inverse_normal_cdf(uniform01(bits));
}

}  // namespace gmr::detail
