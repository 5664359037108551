#ifndef TWINCURVE_AELL_KERNEL_HPP
#define TWINCURVE_AELL_KERNEL_HPP

#include <cstdint>
#include <vector>

namespace twincurve {

// chi tables must be allocated with this much extra tail room; the AVX2
// kernel gathers 4 bytes at a time.
inline constexpr std::size_t kChiPad = 32;

// Sum over x in F_ell of chi(x^3 + a2 x^2 + a4 x), chi the quadratic
// character given as a table of {-1, 0, +1} bytes of length ell (+ pad).
// a2, a4 already reduced mod ell. a_ell at a good prime is minus this.
using CharSumFn = int64_t (*)(uint32_t ell, uint32_t a2, uint32_t a4,
                              const int8_t* chi);

struct Kernel {
    const char* name;
    CharSumFn fn;
};

// Kernels usable on this machine, scalar first.
const std::vector<Kernel>& available_kernels();

// Highest-ranked available kernel, or the one named by TWINCURVE_KERNEL
// (exact name; unknown/unavailable names throw std::runtime_error).
const Kernel& active_kernel();

// chi table for an odd prime ell, size ell + kChiPad.
std::vector<int8_t> quadratic_character(uint32_t ell);

// Convenience: build the table and run the active kernel.
int64_t curve_char_sum(uint32_t ell, uint32_t a2, uint32_t a4);

}  // namespace twincurve

#endif
