#include "twincurve/reduction.hpp"

#include <algorithm>

#include "twincurve/numth.hpp"

namespace twincurve {

std::vector<int64_t> bad_primes(const TwinCurve& E) {
    std::vector<int64_t> out{2, E.p};
    for (const auto& [q, e] : factorize(mpz_class(E.p - 2)))
        if (q != 2) out.push_back(q.get_si());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ReductionData reduce_at(const TwinCurve& E, int64_t ell) {
    if (ell < 2 || !is_prime(static_cast<uint64_t>(ell)))
        throw std::domain_error("reduce_at: ell must be prime");
    const InvariantSet inv = invariants(E);
    ReductionData r;
    r.prime = ell;
    if (!mpz_divisible_ui_p(inv.disc.get_mpz_t(), static_cast<unsigned long>(ell))) {
        r.kodaira = KodairaType::Good;
        return r;
    }
    r.v_disc = valuation(inv.disc, mpz_class(ell));
    r.v_c4 = mpz_divisible_ui_p(inv.c4.get_mpz_t(), static_cast<unsigned long>(ell))
                 ? valuation(inv.c4, mpz_class(ell))
                 : 0;
    r.v_c6 = inv.c6 == 0 ? 0
             : mpz_divisible_ui_p(inv.c6.get_mpz_t(), static_cast<unsigned long>(ell))
                 ? valuation(inv.c6, mpz_class(ell))
                 : 0;
    if (ell == 2) {
        // decision sequence at 2 for this family:
        // y^2 = x^2(x-1) mod 2 has the singular point (0,0), so not good;
        // 2 | b2 rules out I_n; a6 = 0 = 0 mod 4 rules out II;
        // b8 = -4p^2 with p odd has v2 = 2, so 8 does not divide b8: type III.
        if (mpz_odd_p(inv.b2.get_mpz_t()))
            throw unsupported_model("reduce_at: b2 odd at 2, not this family");
        if (E.a2 % 2 != 0 || E.a4 % 2 != 0)
            throw unsupported_model("reduce_at: a-invariants odd, not this family");
        if (mpz_divisible_ui_p(inv.b8.get_mpz_t(), 8))
            throw unsupported_model("reduce_at: 8 | b8, decision sequence inconclusive");
        r.kodaira = KodairaType::III;
        r.cond_exp = static_cast<int>(r.v_disc) - 1;  // = 5
        return r;
    }
    // odd bad prime: multiplicative for this family because v_ell(c4) = 0
    // (c4 = 64 mod p and mod p-2); enforced, not assumed
    if (r.v_c4 != 0)
        throw unsupported_model("reduce_at: v(c4) > 0 at an odd bad prime");
    r.kodaira = KodairaType::In;
    r.n = static_cast<int>(r.v_disc);
    r.cond_exp = 1;
    if (E.p % ell == 0)
        r.split = (legendre(int64_t(-2), ell) == 1);
    else if ((E.p - 2) % ell == 0)
        r.split = (legendre(int64_t(2), ell) == 1);
    else
        throw unsupported_model("reduce_at: odd bad prime divides neither p nor p-2");
    return r;
}

mpz_class conductor(const TwinCurve& E) {
    mpz_class N = 1;
    for (int64_t ell : bad_primes(E)) {
        const ReductionData r = reduce_at(E, ell);
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(ell),
                      static_cast<unsigned long>(r.cond_exp));
        N *= f;
    }
    return N;
}

bool tangent_cone_split(const TwinCurve& E, int64_t ell) {
    if (ell == 2 || !is_prime(static_cast<uint64_t>(ell)))
        throw std::domain_error("tangent_cone_split: ell must be an odd prime");
    const InvariantSet inv = invariants(E);
    if (!mpz_divisible_ui_p(inv.disc.get_mpz_t(), static_cast<unsigned long>(ell)))
        throw std::domain_error("tangent_cone_split: good reduction at ell");
    // find the singular point of y^2 = f(x) mod ell: f(x0) = f'(x0) = 0, y0 = 0
    const int64_t a2 = ((E.a2 % ell) + ell) % ell;
    const int64_t a4 = ((E.a4 % ell) + ell) % ell;
    int64_t x0 = -1;
    for (int64_t x = 0; x < ell; ++x) {
        const int64_t fx = ((x * x % ell + a2 * x) % ell * x + a4 * x) % ell;
        const int64_t dfx = (3 * x % ell * x % ell + 2 * a2 * x + a4) % ell;
        if (fx % ell == 0 && dfx % ell == 0) { x0 = x; break; }
    }
    if (x0 < 0)
        throw unsupported_model("tangent_cone_split: no singular point found");
    // cone y^2 = c (x - x0)^2 with c = f''(x0)/2 = 3 x0 + a2 mod ell
    const int64_t c = ((3 * x0 + a2) % ell + ell) % ell;
    if (c == 0)
        throw std::domain_error("tangent_cone_split: cusp, not multiplicative");
    return legendre(c, ell) == 1;
}

}  // namespace twincurve
