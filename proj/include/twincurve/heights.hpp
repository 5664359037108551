#ifndef TWINCURVE_HEIGHTS_HPP
#define TWINCURVE_HEIGHTS_HPP

#include "twincurve/points.hpp"

namespace twincurve {

struct HeightReport {
    double naive = 0.0;
    double canonical = 0.0;
    double error_bound = 0.0;
    int steps = 0;                 // telescope iterations used
    const char* method = "telescope";
};

// Neron-Tate height in the x-coordinate normalization
//   hhat(P) = lim h(x(2^n P)) / 4^n,   h(x) = log max(|num x|, |den x|),
// the convention standard curve tables use. Computed as a sum of per-place
// telescopes for the duplication map x -> N(x)/D(x):
//   - at the real place, the renormalized orbit of (num : den) in long double,
//     with the floating-point slop folded into error_bound;
//   - at each prime q | disc, exactly in Z/q^K windows; per-step valuations
//     are bounded by v_q(Res(N, D)) = v_q(disc^2), so the window size needed
//     for a given tolerance is known in advance.
// Torsion points come out as 0 within error_bound. error_bound <= tol unless
// the floating-point slop alone exceeds tol, which is reported, not hidden.
HeightReport canonical_height(const RationalPoint& P, double tol = 1e-9);

// <P,Q> = (hhat(P+Q) - hhat(P) - hhat(Q)) / 2.
double height_pairing(const RationalPoint& P, const RationalPoint& Q,
                      double tol = 1e-9);

}  // namespace twincurve

#endif
