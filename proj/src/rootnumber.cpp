#include "twincurve/rootnumber.hpp"

#include <stdexcept>

#include "twincurve/numth.hpp"
#include "twincurve/reduction.hpp"

namespace twincurve {

int w_infinity() { return -1; }

int w_odd_multiplicative(const TwinCurve& E, int64_t ell) {
    const ReductionData r = reduce_at(E, ell);
    if (r.kodaira != KodairaType::In)
        throw std::domain_error("w_odd_multiplicative: reduction at ell is not I_n");
    return *r.split ? -1 : +1;
}

int t_of_p(const TwinCurve& E) {
    // T = c4' - 4 c6 / 2^7 = ((p+2)^2 - 6p) - 2(p+2)((p+2)^2 - 9p)
    const int64_t p16 = E.p % 16;
    const int64_t s = p16 + 2;
    const int64_t t = (s * s - 6 * p16) - 2 * s * (s * s - 9 * p16);
    return static_cast<int>(((t % 16) + 16) % 16);
}

int w_two(const TwinCurve& E) {
    const InvariantSet inv = invariants(E);
    // the residue criterion is the unique table row for Kodaira III with
    // (v2(disc), v2(c4), v2(c6)) = (6, 4, >=7) and c4' = 3 mod 4; re-check all
    if (valuation(inv.disc, 2) != 6 || valuation(inv.c4, 2) != 4 ||
        valuation(inv.c6, 2) < 7)
        throw unsupported_model("w_two: 2-adic invariant triple out of range");
    mpz_class c4p = inv.c4 >> 4;
    if (mpz_class(c4p % 4) != 3)
        throw unsupported_model("w_two: c4' != 3 mod 4");
    if (reduce_at(E, 2).kodaira != KodairaType::III)
        throw unsupported_model("w_two: reduction at 2 is not type III");
    const int t = t_of_p(E);
    return (t == 7 || t == 11) ? +1 : -1;
}

RootNumberReport global_root_number(const TwinCurve& E) {
    RootNumberReport rep;
    rep.w_inf = w_infinity();
    rep.w_2 = w_two(E);
    rep.w_p = w_odd_multiplicative(E, E.p);
    rep.w_q = 1;
    for (int64_t ell : bad_primes(E))
        if (ell != 2 && ell != E.p) rep.w_q *= w_odd_multiplicative(E, ell);
    rep.w_global = rep.w_inf * rep.w_2 * rep.w_p * rep.w_q;
    rep.t_mod16 = t_of_p(E);
    if (rep.t_mod16 != 3 && rep.t_mod16 != 11)
        throw unsupported_model("global_root_number: T(p) residue out of {3,11}");
    const int64_t e1 = (E.p - 1) / 2;
    const int64_t e2 = ((E.p - 2) * (E.p - 2) - 1) / 8;
    rep.closed_form = ((e1 + e2) % 2 == 0) ? +1 : -1;
    rep.applicable_closed_form = E.twin && E.p >= 7;
    return rep;
}

Parity predicted_analytic_parity(const TwinCurve& E) {
    if (!E.twin || E.p < 7)
        throw std::domain_error(
            "predicted_analytic_parity: needs a twin pair with p >= 7");
    return global_root_number(E).w_global == -1 ? Parity::Odd : Parity::Even;
}

}  // namespace twincurve
