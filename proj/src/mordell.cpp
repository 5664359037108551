#include "twincurve/mordell.hpp"

#include <stdexcept>

#include "twincurve/numth.hpp"

namespace twincurve {

int rank_bound(const TwinCurve& E) {
    // y^2 = x^3 + Ax^2 + Bx with A = a2, B = a4; A^2 - 4B = (p-2)^2
    const mpz_class A = E.a2, B = E.a4;
    return nu(A * A - 4 * B) + nu(B) - 1;
}

RankPrediction beers_prediction(const TwinCurve& E) {
    if (!E.twin || E.p < 7)
        throw std::domain_error("beers_prediction: needs a twin pair with p >= 7");
    RankPrediction pred;
    pred.upper_bound = rank_bound(E);
    pred.parity = predicted_analytic_parity(E);
    switch (E.p % 8) {
        case 7: pred.beers = {0}; break;
        case 3:
        case 5: pred.beers = {1}; break;
        case 1: pred.beers = {0, 2}; break;
    }
    for (int r : pred.beers)
        if (r > pred.upper_bound)
            throw std::logic_error("beers_prediction: prediction exceeds rank bound");
    return pred;
}

}  // namespace twincurve
