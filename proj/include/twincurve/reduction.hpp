#ifndef TWINCURVE_REDUCTION_HPP
#define TWINCURVE_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "twincurve/curve.hpp"

namespace twincurve {

// Raised when an input violates the structural facts this family guarantees
// (e.g. an additive odd prime, which cannot occur for y^2 = x(x-2)(x-p)).
struct unsupported_model : std::logic_error {
    using std::logic_error::logic_error;
};

enum class KodairaType { Good, In, III };

struct ReductionData {
    int64_t prime = 0;
    KodairaType kodaira = KodairaType::Good;
    int n = 0;                      // the n of I_n (0 otherwise)
    std::optional<bool> split;      // present iff multiplicative
    int cond_exp = 0;               // exponent of the conductor
    long v_disc = 0, v_c4 = 0, v_c6 = 0;
};

// Bad primes of E ascending: {2} + p + odd prime factors of p-2.
std::vector<int64_t> bad_primes(const TwinCurve& E);

// Classify reduction at a prime. Odd bad primes are multiplicative I_{v(disc)}
// (v_ell(c4) = 0 is checked and enforced); split-ness comes from the tangent
// cone closed forms (-2/ell) at ell | p and (2/ell) at ell | p-2. At ell = 2
// the decision sequence is: singular point exists; 2 | b2 rules out I_n;
// 4 | a6 rules out II; 8 does not divide b8 gives III with f = v2(disc) - 1.
ReductionData reduce_at(const TwinCurve& E, int64_t ell);

// N = prod ell^cond_exp; equals 32 p (p-2) for twin p.
mpz_class conductor(const TwinCurve& E);

// Direct test: locate the singular point of E mod ell by brute force and
// decide whether the tangent cone y^2 - c (x - x0)^2 splits over F_ell.
// Only valid at odd multiplicative primes; others -> std::domain_error.
// Independent of the Legendre closed forms used by reduce_at.
bool tangent_cone_split(const TwinCurve& E, int64_t ell);

}  // namespace twincurve

#endif
