#ifndef TWINCURVE_POINTS_HPP
#define TWINCURVE_POINTS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "twincurve/curve.hpp"

namespace twincurve {

// Exact rational point on E_p; (x, y) unless infinity. The curve is carried
// by its p so that mixed-curve arithmetic can be rejected.
struct RationalPoint {
    int64_t curve_p = 0;
    bool infinity = true;
    mpq_class x, y;
};

RationalPoint infinity_point(const TwinCurve& E);

// Exact Weierstrass relation test.
bool on_curve(const TwinCurve& E, const mpq_class& x, const mpq_class& y);

// Validating constructor: throws std::domain_error if (x, y) is not on E.
// Also checks the denominator structure den(x) = e^2, den(y) = e^3.
RationalPoint make_point(const TwinCurve& E, const mpq_class& x, const mpq_class& y);

RationalPoint negate(const RationalPoint& P);

// Chord-tangent addition; points on different curves -> std::domain_error.
RationalPoint add(const RationalPoint& P, const RationalPoint& Q);

RationalPoint multiply(const RationalPoint& P, int64_t k);

struct TorsionSubgroup {
    int order = 4;
    std::array<int, 2> structure{2, 2};   // invariant factors, Z/d1 x Z/d2
    std::vector<RationalPoint> points;    // the full subgroup, infinity first
};

// Bounds |tors| by gcd of #E(F_ell) over several good primes, then checks the
// possible order-3 and order-4 candidates exactly. For this family the result
// is always Z/2 x Z/2 = {O, (0,0), (2,0), (p,0)}.
TorsionSubgroup torsion_subgroup(const TwinCurve& E);

// log max(|num x|, |den x|); infinity -> std::domain_error.
double naive_height(const RationalPoint& P);

// All affine points with x = m/e^2, max(|m|, e^2) <= exp(height_cap + slack),
// sorted by (naive height, x), one representative per {P, -P} with y >= 0.
// Complete with respect to that naive-height bound; the slack exists because
// curve tables are usually cut by canonical height, which can exceed the
// naive height (e.g. x = 650 on E_13: naive 6.48, canonical 4.85).
std::vector<RationalPoint> search_points(const TwinCurve& E, double height_cap,
                                         double slack = 2.0);

}  // namespace twincurve

#endif
