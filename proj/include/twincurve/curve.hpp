#ifndef TWINCURVE_CURVE_HPP
#define TWINCURVE_CURVE_HPP

#include <cstdint>

#include <gmpxx.h>

namespace twincurve {

// E_p : y^2 = x(x-2)(x-p) = x^3 - (p+2)x^2 + 2p x, for an odd prime p >= 5.
// a1 = a3 = a6 = 0 always; we keep the two nonzero a-invariants explicit.
struct TwinCurve {
    int64_t p = 0;
    bool twin = false;              // p - 2 is prime
    bool below_theorem_range = false;  // p == 5: admitted, but the twin-curve
                                       // theorems assume p >= 7
    int64_t a2 = 0;                 // -(p+2)
    int64_t a4 = 0;                 // 2p
};

struct InvariantSet {
    mpz_class b2, b4, b6, b8;
    mpz_class c4, c6;
    mpz_class disc;
    mpq_class j;  // c4^3 / disc, canonicalized
};

// Throws std::domain_error unless p is an odd prime >= 5.
TwinCurve make_curve(int64_t p);

// All invariants, exact. Closed forms for this family:
//   b2 = -4(p+2), b4 = 4p, b6 = 0, b8 = -4p^2,
//   c4 = 16((p+2)^2 - 6p), c6 = 64(p+2)((p+2)^2 - 9p), disc = 64 p^2 (p-2)^2.
InvariantSet invariants(const TwinCurve& E);

// y^2 = x^3 + Ax + B via the shift x -> x + (p+2)/3. Integral iff 3 | p+2,
// which holds for every twin leader p >= 5; for other primes the rational
// model is returned with integral = false.
struct ShortForm {
    mpq_class A, B;
    bool integral;
};
ShortForm short_form(const TwinCurve& E);

// v_ell(disc) < 12 at every bad prime (always true here; computed, not assumed).
bool is_global_minimal(const TwinCurve& E);

// Valuations of j at 2, p and p-2. Requires p-2 prime.
struct JValuations {
    long v2, vp, vq;
};
JValuations j_valuations(const TwinCurve& E);

// Exact comparison of j-invariants of two twin-leader curves; true iff they
// differ, which holds whenever p != q.
bool distinct_j(int64_t p, int64_t q);

}  // namespace twincurve

#endif
