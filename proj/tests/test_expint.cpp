#include "twincurve/expint.hpp"

#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"

using twincurve::exp_int_e1;

TEST_CASE("E1 reference values") {
    // frozen high-precision values
    const struct { double x, e1; } ref[] = {
        {0.01, 4.037929576538113811},
        {0.05, 2.467898488509974317},
        {0.125, 1.623425640584168791},
        {0.25, 1.044282634443738195},
        {0.5, 0.5597735947761608117},
        {0.9, 0.2601839393259996305},
        {1.0, 0.2193839343955202737},
        {1.1, 0.1859909045360401288},
        {1.5, 0.1000195824066326519},
        {2.0, 0.04890051070806111957},
        {3.0, 0.01304838109419703741},
        {5.0, 0.001148295591275325797},
        {8.0, 0.00003766562284392490177},
        {12.0, 4.751081824672493933e-7},
        {20.0, 9.83552529064988169e-11},
        {35.0, 1.7527059389947372e-17},
        {50.0, 3.783264029550459019e-24},
        {80.0, 2.228543258688472911e-37},
        {120.0, 6.337325155011510259e-55},
        {200.0, 6.885226106307635598e-90},
        {400.0, 4.77601358642097223e-177},
        {700.0, 1.406518766234032923e-307},
    };
    for (const auto& r : ref)
        CHECK(std::fabs(exp_int_e1(r.x) - r.e1) <= 1e-12 * r.e1);
}

TEST_CASE("E1 against quadrature across the switchover") {
    for (double x = 0.05; x < 30.0; x *= 1.17) {
        const double mine = exp_int_e1(x);
        const double quad = oracles::e1_quadrature(x);
        CHECK(std::fabs(mine - quad) <= 1e-12 * quad + 1e-300);
    }
}

TEST_CASE("E1 domain and decay") {
    CHECK_THROWS_AS(exp_int_e1(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_int_e1(-1.0), std::domain_error);
    CHECK(exp_int_e1(800.0) == 0.0);  // underflow region
    // monotone decreasing
    double prev = exp_int_e1(0.01);
    for (double x = 0.1; x < 100; x += 0.7) {
        const double v = exp_int_e1(x);
        CHECK(v < prev);
        prev = v;
    }
    // E1(x) < e^-x / x (the bound the series tails rely on)
    for (double x : {0.5, 1.0, 2.0, 10.0, 100.0})
        CHECK(exp_int_e1(x) < std::exp(-x) / x);
}
