#include "twincurve/points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "twincurve/aell_kernel.hpp"
#include "twincurve/numth.hpp"

namespace twincurve {

namespace {

mpq_class curve_rhs(const TwinCurve& E, const mpq_class& x) {
    mpq_class r = x * x * x + mpq_class(E.a2) * x * x + mpq_class(E.a4) * x;
    r.canonicalize();
    return r;
}

void require_same_curve(const RationalPoint& P, const RationalPoint& Q) {
    if (P.curve_p != Q.curve_p)
        throw std::domain_error("points live on different curves");
}

}  // namespace

RationalPoint infinity_point(const TwinCurve& E) {
    RationalPoint P;
    P.curve_p = E.p;
    P.infinity = true;
    return P;
}

bool on_curve(const TwinCurve& E, const mpq_class& x, const mpq_class& y) {
    return y * y == curve_rhs(E, x);
}

RationalPoint make_point(const TwinCurve& E, const mpq_class& x,
                         const mpq_class& y) {
    if (!on_curve(E, x, y))
        throw std::domain_error("make_point: (x, y) does not satisfy the curve");
    mpq_class cx = x, cy = y;
    cx.canonicalize();
    cy.canonicalize();
    // den(x) = e^2 and den(y) = e^3 for an integral model; a failure here
    // would mean broken rational arithmetic upstream
    mpz_class e2 = cx.get_den(), e;
    if (!mpz_perfect_square_p(e2.get_mpz_t()))
        throw std::domain_error("make_point: den(x) is not a perfect square");
    mpz_sqrt(e.get_mpz_t(), e2.get_mpz_t());
    if (cy.get_den() != e * e2)
        throw std::domain_error("make_point: den(y) != den(x)^(3/2)");
    RationalPoint P;
    P.curve_p = E.p;
    P.infinity = false;
    P.x = cx;
    P.y = cy;
    return P;
}

RationalPoint negate(const RationalPoint& P) {
    RationalPoint R = P;
    if (!R.infinity) R.y = -R.y;
    return R;
}

RationalPoint add(const RationalPoint& P, const RationalPoint& Q) {
    require_same_curve(P, Q);
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const TwinCurve E = make_curve(P.curve_p);
    mpq_class lambda;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return infinity_point(E);  // includes 2-torsion doubling
        lambda = (3 * P.x * P.x + 2 * mpq_class(E.a2) * P.x + mpq_class(E.a4)) /
                 (2 * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    lambda.canonicalize();
    mpq_class x3 = lambda * lambda - mpq_class(E.a2) - P.x - Q.x;
    mpq_class y3 = lambda * (P.x - x3) - P.y;
    x3.canonicalize();
    y3.canonicalize();
    RationalPoint R;
    R.curve_p = P.curve_p;
    R.infinity = false;
    R.x = x3;
    R.y = y3;
    return R;
}

RationalPoint multiply(const RationalPoint& P, int64_t k) {
    const TwinCurve E = make_curve(P.curve_p);
    RationalPoint base = k < 0 ? negate(P) : P;
    uint64_t n = static_cast<uint64_t>(k < 0 ? -k : k);
    RationalPoint acc = infinity_point(E);
    while (n) {
        if (n & 1) acc = add(acc, base);
        n >>= 1;
        if (n) base = add(base, base);
    }
    return acc;
}

namespace {

int64_t count_points_mod(const TwinCurve& E, int64_t ell) {
    // #E(F_ell) = ell + 1 + sum chi(f(x))
    const uint32_t a2 = static_cast<uint32_t>(((E.a2 % ell) + ell) % ell);
    const uint32_t a4 = static_cast<uint32_t>(((E.a4 % ell) + ell) % ell);
    return ell + 1 + curve_char_sum(static_cast<uint32_t>(ell), a2, a4);
}

// integer roots of the quartic N(x) - xt * D(x) (candidates for half of the
// 2-torsion point with x = xt); any rational torsion x is integral here
std::vector<mpz_class> halving_roots(const InvariantSet& inv, const mpz_class& xt) {
    auto N = [&](const mpz_class& x) {
        return x * x * x * x - inv.b4 * x * x - 2 * inv.b6 * x - inv.b8;
    };
    auto D = [&](const mpz_class& x) {
        return 4 * x * x * x + inv.b2 * x * x + 2 * inv.b4 * x + inv.b6;
    };
    const mpz_class cst = -inv.b8 - xt * inv.b6;  // constant term of N - xt D
    std::vector<mpz_class> roots;
    if (cst == 0) return roots;  // x = 0 handled by the caller's torsion set
    // monic integer quartic: rational roots are integer divisors of |cst|
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : factorize(cst)) {
        const size_t base = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    for (const auto& d : divs)
        for (int sgn : {1, -1}) {
            const mpz_class x = sgn * d;
            if (N(x) - xt * D(x) == 0) roots.push_back(x);
        }
    return roots;
}

}  // namespace

TorsionSubgroup torsion_subgroup(const TwinCurve& E) {
    // bound |tors| by gcd of #E(F_ell) over several good odd primes
    int64_t bound = 0;
    int64_t ell = 3;
    for (int found = 0; found < 8; ell += 2) {
        if (!is_prime(static_cast<uint64_t>(ell))) continue;
        if (E.p % ell == 0 || (E.p - 2) % ell == 0) continue;
        bound = std::gcd(bound, count_points_mod(E, ell));
        ++found;
    }
    TorsionSubgroup T;
    T.points.push_back(infinity_point(E));
    for (int64_t xt : {int64_t(0), int64_t(2), E.p})
        T.points.push_back(make_point(E, mpq_class(xt), mpq_class(0)));
    if (bound % 8 == 0) {
        // a point of order 4 would halve some 2-torsion point
        const InvariantSet inv = invariants(E);
        for (int64_t xt : {int64_t(0), int64_t(2), E.p})
            for (const mpz_class& x : halving_roots(inv, mpz_class(xt))) {
                const mpq_class rhs = curve_rhs(E, mpq_class(x));
                mpz_class num = rhs.get_num();
                if (rhs >= 0 && mpz_perfect_square_p(num.get_mpz_t()))
                    throw std::logic_error(
                        "torsion_subgroup: unexpected point of order 4");
            }
    }
    if (bound % 3 == 0) {
        // order-3 points are integral roots of psi_3
        const InvariantSet inv = invariants(E);
        const mpz_class cst = inv.b8;
        std::vector<mpz_class> divs{1};
        for (const auto& [q, e] : factorize(cst)) {
            const size_t base = divs.size();
            mpz_class pw = 1;
            for (int i = 1; i <= e; ++i) {
                pw *= q;
                for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
            }
        }
        for (const auto& d : divs)
            for (int sgn : {1, -1}) {
                const mpz_class x = sgn * d;
                const mpz_class psi3 = 3 * x * x * x * x + inv.b2 * x * x * x +
                                       3 * inv.b4 * x * x + 3 * inv.b6 * x +
                                       inv.b8;
                if (psi3 != 0) continue;
                const mpq_class rhs = curve_rhs(E, mpq_class(x));
                mpz_class num = rhs.get_num();
                if (rhs > 0 && mpz_perfect_square_p(num.get_mpz_t()))
                    throw std::logic_error(
                        "torsion_subgroup: unexpected point of order 3");
            }
    }
    T.order = 4;
    T.structure = {2, 2};
    return T;
}

double naive_height(const RationalPoint& P) {
    if (P.infinity) throw std::domain_error("naive_height: undefined at infinity");
    const mpz_class num = P.x.get_num(), den = P.x.get_den();
    mpz_class m = abs(num) > den ? abs(num) : den;
    if (m == 1) return 0.0;
    long exp2 = 0;
    const double d = mpz_get_d_2exp(&exp2, m.get_mpz_t());
    return std::log(d) + double(exp2) * std::log(2.0);
}

std::vector<RationalPoint> search_points(const TwinCurve& E, double height_cap,
                                         double slack) {
    if (!(height_cap > 0))
        throw std::domain_error("search_points: height_cap must be > 0");
    if (height_cap + slack > 12.5)
        throw std::domain_error(
            "search_points: enumeration cost grows like exp(1.5 (cap + slack)); "
            "cap + slack is limited to 12.5");
    const double bound = std::exp(height_cap + slack);
    const int64_t mmax = static_cast<int64_t>(bound);
    std::vector<RationalPoint> out;
    for (int64_t e = 1; e * e <= mmax; ++e) {
        const mpz_class e2 = mpz_class(e) * e;
        // real locus: y^2 = m(m - 2e^2)(m - p e^2) >= 0 needs
        // m in [0, 2e^2] or m >= p e^2
        for (int64_t m = 0; m <= mmax; ++m) {
            if (m > 2 * e * e && m < E.p * e * e) { m = E.p * e * e - 1; continue; }
            if (e > 1 && std::gcd(m, e) != 1) continue;
            const mpz_class mm = m;
            mpz_class rhs = mm * (mm - 2 * e2) * (mm - E.p * e2);
            if (rhs < 0) continue;
            if (!mpz_perfect_square_p(rhs.get_mpz_t())) continue;
            mpz_class Y;
            mpz_sqrt(Y.get_mpz_t(), rhs.get_mpz_t());
            mpq_class x(mm, e2), y(Y, e2 * e);
            x.canonicalize();
            y.canonicalize();
            out.push_back(make_point(E, x, y));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalPoint& a, const RationalPoint& b) {
                  const double ha = naive_height(a), hb = naive_height(b);
                  if (ha != hb) return ha < hb;
                  return a.x < b.x;
              });
    return out;
}

}  // namespace twincurve
