#include <cstdint>

#if defined(__aarch64__)
#include <arm_neon.h>

namespace twincurve {

// Four interleaved residue classes x = 4i + j with step-4 differences:
//   D1(x) = 12x^2 + (48 + 8 a2)x + (64 + 16 a2 + 4 a4)
//   D2(x) = 96x + 384 + 32 a2,  D3 = 384
// The recurrences are vectorized; the chi lookups stay scalar per lane
// (no gather on NEON).
int64_t char_sum_neon(uint32_t ell, uint32_t a2, uint32_t a4,
                      const int8_t* chi) {
    const uint64_t m = ell;
    uint32_t f0[4], d1[4], d2[4];
    for (uint32_t j = 0; j < 4; ++j) {
        const uint64_t x = j;
        f0[j] = uint32_t(((x * x % m * x) + uint64_t(a2) * x % m * x +
                          uint64_t(a4) * x) % m);
        d1[j] = uint32_t((12 * x % m * x + (48 + 8 * uint64_t(a2)) % m * x +
                          (64 + 16 * uint64_t(a2) + 4 * uint64_t(a4))) % m);
        d2[j] = uint32_t((96 * x + 384 + 32 * uint64_t(a2)) % m);
    }
    uint32x4_t F = vld1q_u32(f0);
    uint32x4_t D1 = vld1q_u32(d1);
    uint32x4_t D2 = vld1q_u32(d2);
    const uint32x4_t D3 = vdupq_n_u32(uint32_t(384 % m));
    const uint32x4_t M = vdupq_n_u32(ell);

    auto addmod = [&](uint32x4_t x, uint32x4_t y) {
        uint32x4_t s = vaddq_u32(x, y);
        return vsubq_u32(s, vandq_u32(vcgeq_u32(s, M), M));
    };

    int64_t total = 0;
    const uint32_t nblk = ell / 4;
    for (uint32_t i = 0; i < nblk; ++i) {
        total += chi[vgetq_lane_u32(F, 0)];
        total += chi[vgetq_lane_u32(F, 1)];
        total += chi[vgetq_lane_u32(F, 2)];
        total += chi[vgetq_lane_u32(F, 3)];
        F = addmod(F, D1);
        D1 = addmod(D1, D2);
        D2 = addmod(D2, D3);
    }
    uint32_t ftail[4];
    vst1q_u32(ftail, F);
    for (uint32_t x = 4 * nblk, j = 0; x < ell; ++x, ++j) total += chi[ftail[j]];
    return total;
}

}  // namespace twincurve
#endif
