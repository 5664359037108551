#include "twincurve/heights.hpp"

#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twincurve/numth.hpp"

using namespace twincurve;

TEST_CASE("table fixtures to 1e-6") {
    const TwinCurve E5 = make_curve(5);
    const HeightReport h5 = canonical_height(make_point(E5, 1, 2), 1e-9);
    CHECK(std::fabs(h5.canonical - 1.03571952245041) <= 1e-6);
    CHECK(h5.error_bound <= 1e-9);

    const TwinCurve E13 = make_curve(13);
    const HeightReport h13 = canonical_height(make_point(E13, 650, 16380), 1e-9);
    CHECK(std::fabs(h13.canonical - 4.84635169014375) <= 1e-6);

    // two more rows with projective input, exercising denominators
    const TwinCurve E19 = make_curve(19);
    const HeightReport h19 = canonical_height(
        make_point(E19, mpq_class(7650, 4913), mpq_class(17040, 4913)), 1e-9);
    CHECK(std::fabs(h19.canonical - 7.09575579081593) <= 1e-6);

    const TwinCurve E109 = make_curve(109);
    const HeightReport h109 = canonical_height(
        make_point(E109, mpq_class("129820027709645/108156342861125"),
                   mpq_class("-1100193936926826/108156342861125")),
        1e-9);
    CHECK(std::fabs(h109.canonical - 24.2297718198169) <= 1e-6);
}

TEST_CASE("telescope against the exact doubling limit") {
    // independent oracle: exact big-rational doublings, error O(C/4^n)
    const TwinCurve E5 = make_curve(5);
    const double tele5 = canonical_height(make_point(E5, 1, 2), 1e-10).canonical;
    const double dbl5 = oracles::canonical_height_doubling(E5, mpq_class(1), 8);
    CHECK(std::fabs(tele5 - dbl5) < 5e-4);

    const TwinCurve E13 = make_curve(13);
    const double tele13 =
        canonical_height(make_point(E13, 650, 16380), 1e-10).canonical;
    const double dbl13 =
        oracles::canonical_height_doubling(E13, mpq_class(650), 7);
    CHECK(std::fabs(tele13 - dbl13) < 5e-3);

    // a point with denominators at a bad prime: (0,0) + generator on E_5
    const RationalPoint S =
        add(make_point(E5, 1, 2), make_point(E5, 0, 0));
    const double teleS = canonical_height(S, 1e-10).canonical;
    const double dblS = oracles::canonical_height_doubling(E5, S.x, 8);
    CHECK(std::fabs(teleS - dblS) < 5e-4);
}

TEST_CASE("torsion has height zero") {
    for (int64_t p : {5, 7, 109}) {
        const TwinCurve E = make_curve(p);
        for (int64_t xt : {int64_t(0), int64_t(2), p}) {
            const HeightReport h =
                canonical_height(make_point(E, mpq_class(xt), 0), 1e-9);
            CHECK(std::fabs(h.canonical) <= h.error_bound + 1e-12);
        }
        CHECK(canonical_height(infinity_point(E), 1e-9).canonical == 0.0);
    }
}

TEST_CASE("quadraticity: hhat(2P) = 4 hhat(P)") {
    const TwinCurve E5 = make_curve(5);
    const RationalPoint P = make_point(E5, 1, 2);
    const double hP = canonical_height(P, 1e-10).canonical;
    const double h2P = canonical_height(add(P, P), 1e-10).canonical;
    CHECK(std::fabs(h2P - 4 * hP) <= 8e-10);

    const TwinCurve E13 = make_curve(13);
    const RationalPoint Q = make_point(E13, 650, 16380);
    const double hQ = canonical_height(Q, 1e-10).canonical;
    const double h2Q = canonical_height(add(Q, Q), 1e-10).canonical;
    CHECK(std::fabs(h2Q - 4 * hQ) <= 8e-10);

    // translating by torsion does not change the height
    const double hPT =
        canonical_height(add(P, make_point(E5, 2, 0)), 1e-10).canonical;
    CHECK(std::fabs(hPT - hP) <= 1e-9);
}

TEST_CASE("height pairing") {
    const TwinCurve E5 = make_curve(5);
    const RationalPoint P = make_point(E5, 1, 2);
    const double hP = canonical_height(P, 1e-9).canonical;
    CHECK(std::fabs(height_pairing(P, P, 1e-9) - hP) <= 1e-8);
    CHECK(std::fabs(height_pairing(P, negate(P), 1e-9) + hP) <= 1e-8);
}

TEST_CASE("independence witness on the rank-two curve") {
    const TwinCurve E = make_curve(4273);
    const RationalPoint P1 =
        make_point(E, mpq_class("7921/4225"), mpq_class("-8695656/274625"));
    const RationalPoint P2 = make_point(
        E, mpq_class("16743024274002657408/26415925819311200929"),
        mpq_class("-8257916574244505457580022586480/"
                  "135768417051805457107690354033"));
    const double h1 = canonical_height(P1, 1e-8).canonical;
    const double h2 = canonical_height(P2, 1e-8).canonical;
    const double h12 = height_pairing(P1, P2, 1e-8);
    const double det = h1 * h2 - h12 * h12;
    CHECK(h1 == doctest::Approx(12.875164).epsilon(1e-4));
    CHECK(h2 == doctest::Approx(48.900460).epsilon(1e-4));
    CHECK(det > 100.0);
}

TEST_CASE("unreachable tolerance fails loudly") {
    const TwinCurve E5 = make_curve(5);
    CHECK_THROWS_AS(canonical_height(make_point(E5, 1, 2), 1e-30),
                    std::runtime_error);
}
