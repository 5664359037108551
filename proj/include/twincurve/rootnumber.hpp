#ifndef TWINCURVE_ROOTNUMBER_HPP
#define TWINCURVE_ROOTNUMBER_HPP

#include <cstdint>

#include "twincurve/curve.hpp"

namespace twincurve {

enum class Parity { Even, Odd };

struct RootNumberReport {
    int w_inf = -1;
    int w_2 = 0;
    int w_p = 0;        // local sign at p
    int w_q = 0;        // product of local signs at the odd primes dividing p-2
    int w_global = 0;
    int t_mod16 = 0;    // always 3 or 11 for odd p
    int closed_form = 0;            // (-1)^((p-1)/2 + ((p-2)^2-1)/8)
    bool applicable_closed_form = false;  // twin and p >= 7
};

// Always -1 over the reals.
int w_infinity();

// -1 for split, +1 for non-split multiplicative reduction; additive or good
// primes -> std::domain_error.
int w_odd_multiplicative(const TwinCurve& E, int64_t ell);

// T(p) = ((p+2)^2 - 6p) - 2(p+2)((p+2)^2 - 9p) reduced mod 16.
int t_of_p(const TwinCurve& E);

// Local sign at 2 from the type-III residue criterion: +1 iff T(p) is 7 or 11
// mod 16. The preconditions (v(disc), v(c4), v(c6)) = (6, 4, >=7) and
// c4' = 3 mod 4 are re-checked at runtime; violations raise unsupported_model.
// Equals -(2/p) for every odd p >= 5.
int w_two(const TwinCurve& E);

// Full local-to-global assembly. For twin p >= 7 the product provably equals
// the closed form; for other p the product over the actual bad primes stands
// on its own and applicable_closed_form is false.
RootNumberReport global_root_number(const TwinCurve& E);

// Odd iff w_global = -1, i.e. p = 3, 5 mod 8. Twin p >= 7 only.
Parity predicted_analytic_parity(const TwinCurve& E);

}  // namespace twincurve

#endif
