#ifndef TWINCURVE_LSERIES_HPP
#define TWINCURVE_LSERIES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "twincurve/curve.hpp"

namespace twincurve {

// Default ceiling on the series length; covers conductors up to ~1e9
// (twin p up to ~5600). Larger requests fail loudly with the n_max they
// would need instead of silently degrading accuracy.
inline constexpr int64_t kDefaultSeriesCap = 5'000'000;

struct ResourceLimitError : std::runtime_error {
    int64_t required_n_max;
    int64_t cap;
    ResourceLimitError(int64_t need, int64_t cap_);
};

// Trace of Frobenius: good ell via the quadratic-character sum kernel,
// multiplicative ell gives +1 (split) / -1 (non-split), ell = 2 gives 0.
int64_t a_p(const TwinCurve& E, int64_t ell);

// a_1..a_n_max by multiplicative extension with the prime-power recursion
// a_{ell^(k+1)} = a_ell a_{ell^k} - ell a_{ell^(k-1)} at good ell and
// a_{ell^k} = a_ell^k at bad ell. Uses the a_ell disk cache when
// TWINCURVE_CACHE_DIR is set.
std::vector<int32_t> a_n_table(const TwinCurve& E, int64_t n_max);

struct LValue {
    double value = 0.0;
    double err = 0.0;     // rigorous bound on |returned - true|
    int64_t n_max = 0;
};

// L(E,1) = (1 + w) * sum_{n>=1} (a_n/n) exp(-2 pi n / sqrt(N)).
// For w = -1 the functional equation forces the exact zero. The tail is
// bounded through |a_n| <= d(n) sqrt(n) < 2n, i.e. |a_n / n| < 2.
LValue L_at_1(const TwinCurve& E, double target_err,
              int64_t cap = kDefaultSeriesCap);

// L'(E,1) = 2 * sum (a_n/n) E1(2 pi n / sqrt(N)); requires sign -1.
LValue Lprime_at_1(const TwinCurve& E, double target_err,
                   int64_t cap = kDefaultSeriesCap);

enum class AnalyticRank { Zero, One, EvenAtLeastTwo, OddAtLeastThreeUndetected };

// sign +1: Zero if |L(1)| > zero_tol else EvenAtLeastTwo.
// sign -1: One if |L'(1)| > zero_tol else OddAtLeastThreeUndetected
// (reported, never classified further). Series are computed to zero_tol/10.
AnalyticRank analytic_rank(const TwinCurve& E, double zero_tol = 1e-3,
                           int64_t cap = kDefaultSeriesCap);

const char* to_string(AnalyticRank r);

// Everything the CLI needs in one pass.
struct LSeriesProfile {
    mpz_class conductor;
    int sign = 0;
    int64_t n_max = 0;
    std::vector<int32_t> a;
    double L1 = 0.0, L1_err = 0.0;
    double Lp1 = 0.0, Lp1_err = 0.0;
};
LSeriesProfile build_profile(const TwinCurve& E, double target_err,
                             int64_t cap = kDefaultSeriesCap);

// --- a_ell disk cache -------------------------------------------------------
// Binary little-endian layout, one file per (p, ell_max):
//   bytes 0..7   magic "TWAELCV1"
//   bytes 8..15  u64 p
//   bytes 16..23 u64 ell_max
//   bytes 24..31 u64 count
//   then count records of (u64 ell, i64 a), ascending in ell.
// Files live in TWINCURVE_CACHE_DIR; no env var means no caching.

std::string aell_cache_path(const std::string& dir, int64_t p, int64_t ell_max);
void write_aell_cache(const std::string& path, int64_t p, int64_t ell_max,
                      const std::vector<std::pair<uint64_t, int64_t>>& entries);
std::optional<std::vector<std::pair<uint64_t, int64_t>>>
read_aell_cache(const std::string& path, int64_t p, int64_t ell_max);

}  // namespace twincurve

#endif
