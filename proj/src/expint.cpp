#include "twincurve/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace twincurve {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;
}

double exp_int_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_int_e1: needs x > 0");
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 64; ++k) {
            term *= -x / k;
            const double add = -term / k;
            sum += add;
            if (std::fabs(add) < 1e-18 * std::fabs(sum) + 1e-300) break;
        }
        return -kEulerGamma - std::log(x) + sum;
    }
    if (x > 745.0) return 0.0;  // e^-x underflows; E1(x) < e^-x / x
    // continued fraction E1(x) = e^-x / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...)))))
    // evaluated with the modified Lentz scheme
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 200; ++i) {
        const double a = -double(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

}  // namespace twincurve
