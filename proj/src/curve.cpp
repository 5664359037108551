#include "twincurve/curve.hpp"

#include <stdexcept>

#include "twincurve/numth.hpp"

namespace twincurve {

TwinCurve make_curve(int64_t p) {
    if (p < 5 || p % 2 == 0 || !is_prime(static_cast<uint64_t>(p)))
        throw std::domain_error("make_curve: p must be an odd prime >= 5");
    TwinCurve E;
    E.p = p;
    E.twin = is_prime(static_cast<uint64_t>(p - 2));
    E.below_theorem_range = (p == 5);
    E.a2 = -(p + 2);
    E.a4 = 2 * p;
    return E;
}

InvariantSet invariants(const TwinCurve& E) {
    const mpz_class a2 = E.a2, a4 = E.a4;
    InvariantSet s;
    s.b2 = 4 * a2;
    s.b4 = 2 * a4;
    s.b6 = 0;
    s.b8 = -a4 * a4;
    s.c4 = s.b2 * s.b2 - 24 * s.b4;
    s.c6 = -s.b2 * s.b2 * s.b2 + 36 * s.b2 * s.b4 - 216 * s.b6;
    s.disc = -s.b2 * s.b2 * s.b8 - 8 * s.b4 * s.b4 * s.b4 - 27 * s.b6 * s.b6 +
             9 * s.b2 * s.b4 * s.b6;
    s.j = mpq_class(s.c4 * s.c4 * s.c4, s.disc);
    s.j.canonicalize();
    return s;
}

ShortForm short_form(const TwinCurve& E) {
    // x -> x + s with s = (p+2)/3 kills the quadratic term
    const mpq_class a2 = E.a2, a4 = E.a4;
    const mpq_class s = mpq_class(E.p + 2, 3);
    ShortForm f;
    f.A = 3 * s * s + 2 * a2 * s + a4;
    f.B = s * s * s + a2 * s * s + a4 * s;
    f.A.canonicalize();
    f.B.canonicalize();
    f.integral = ((E.p + 2) % 3 == 0);
    return f;
}

bool is_global_minimal(const TwinCurve& E) {
    const InvariantSet inv = invariants(E);
    for (const auto& [q, e] : factorize(inv.disc))
        if (valuation(inv.disc, q) >= 12) return false;
    return true;
}

JValuations j_valuations(const TwinCurve& E) {
    if (!is_prime(static_cast<uint64_t>(E.p - 2)))
        throw std::domain_error("j_valuations: needs p-2 prime");
    const InvariantSet inv = invariants(E);
    JValuations v;
    v.v2 = valuation(inv.j, mpz_class(2));
    v.vp = valuation(inv.j, mpz_class(E.p));
    v.vq = valuation(inv.j, mpz_class(E.p - 2));
    return v;
}

bool distinct_j(int64_t p, int64_t q) {
    auto check = [](int64_t n) {
        if (n < 7 || !is_prime(static_cast<uint64_t>(n)) ||
            !is_prime(static_cast<uint64_t>(n - 2)))
            throw std::domain_error("distinct_j: arguments must be twin leaders >= 7");
    };
    check(p);
    check(q);
    return invariants(make_curve(p)).j != invariants(make_curve(q)).j;
}

}  // namespace twincurve
