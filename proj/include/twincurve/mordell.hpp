#ifndef TWINCURVE_MORDELL_HPP
#define TWINCURVE_MORDELL_HPP

#include <vector>

#include "twincurve/curve.hpp"
#include "twincurve/rootnumber.hpp"

namespace twincurve {

struct RankPrediction {
    int upper_bound = 0;          // nu(A^2-4B) + nu(B) - 1
    Parity parity = Parity::Even;
    std::vector<int> beers;       // {0}, {1} or {0,2}
};

// For y^2 = x^3 + Ax^2 + Bx with A = -(p+2), B = 2p:
// rank <= nu(A^2 - 4B) + nu(B) - 1, and A^2 - 4B = (p-2)^2.
int rank_bound(const TwinCurve& E);

// Predicted rank set by residue class: {0} for p = 7, {1} for p = 3,5,
// {0,2} for p = 1 (mod 8). Twin p >= 7 only.
RankPrediction beers_prediction(const TwinCurve& E);

}  // namespace twincurve

#endif
