#include "twincurve/aell_kernel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace twincurve {

namespace {

// reference kernel: forward differences of the cubic, one conditional
// subtraction per update, no division or multiplication in the loop
int64_t char_sum_scalar(uint32_t ell, uint32_t a2, uint32_t a4,
                        const int8_t* chi) {
    const uint64_t m = ell;
    // f(x) = x^3 + a2 x^2 + a4 x; differences at step 1:
    //   D1(x) = 3x^2 + (3+2a2)x + (1+a2+a4),  D2(x) = 6x + 6 + 2a2,  D3 = 6
    uint64_t F = 0;
    uint64_t D1 = (1 + uint64_t(a2) + a4) % m;
    uint64_t D2 = (6 + 2 * uint64_t(a2)) % m;
    const uint64_t D3 = 6 % m;
    int64_t acc = 0;
    for (uint32_t x = 0; x < ell; ++x) {
        acc += chi[F];
        F += D1; if (F >= m) F -= m;
        D1 += D2; if (D1 >= m) D1 -= m;
        D2 += D3; if (D2 >= m) D2 -= m;
    }
    return acc;
}

}  // namespace

#if defined(TWINCURVE_HAVE_AVX2)
int64_t char_sum_avx2(uint32_t ell, uint32_t a2, uint32_t a4, const int8_t* chi);
#endif
#if defined(TWINCURVE_HAVE_NEON)
int64_t char_sum_neon(uint32_t ell, uint32_t a2, uint32_t a4, const int8_t* chi);
#endif

const std::vector<Kernel>& available_kernels() {
    static const std::vector<Kernel> kernels = [] {
        std::vector<Kernel> v;
        v.push_back({"scalar", &char_sum_scalar});
#if defined(TWINCURVE_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2")) v.push_back({"avx2", &char_sum_avx2});
#endif
#if defined(TWINCURVE_HAVE_NEON)
        v.push_back({"neon", &char_sum_neon});
#endif
        return v;
    }();
    return kernels;
}

const Kernel& active_kernel() {
    static const Kernel& chosen = [&]() -> const Kernel& {
        const auto& ks = available_kernels();
        if (const char* want = std::getenv("TWINCURVE_KERNEL")) {
            for (const auto& k : ks)
                if (want == std::string(k.name)) return k;
            throw std::runtime_error(std::string("TWINCURVE_KERNEL=") + want +
                                     " is not available on this machine");
        }
        return ks.back();
    }();
    return chosen;
}

std::vector<int8_t> quadratic_character(uint32_t ell) {
    std::vector<int8_t> chi(size_t(ell) + kChiPad, 0);
    for (uint64_t x = 1; x <= (ell - 1) / 2; ++x) chi[x * x % ell] = 1;
    for (uint32_t i = 1; i < ell; ++i)
        if (chi[i] == 0) chi[i] = -1;
    return chi;
}

int64_t curve_char_sum(uint32_t ell, uint32_t a2, uint32_t a4) {
    if (ell >= (1u << 30))
        throw std::domain_error("curve_char_sum: ell exceeds kernel range");
    const auto chi = quadratic_character(ell);
    return active_kernel().fn(ell, a2, a4, chi.data());
}

}  // namespace twincurve
