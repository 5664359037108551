#include "twincurve/lseries.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twincurve/numth.hpp"
#include "twincurve/reduction.hpp"

using namespace twincurve;

TEST_CASE("a_p at bad primes") {
    const TwinCurve E5 = make_curve(5);
    CHECK(a_p(E5, 2) == 0);
    CHECK(a_p(make_curve(7), 7) == -1);  // non-split
    // split/non-split agrees with the reduction data on the twin range
    for (const auto& t : twin_pairs(7, 3000)) {
        const TwinCurve E = make_curve(t.p);
        for (int64_t ell : {t.p, t.q}) {
            const auto r = reduce_at(E, ell);
            CHECK(a_p(E, ell) == (*r.split ? 1 : -1));
        }
    }
}

TEST_CASE("a_p at good primes against point counting") {
    for (int64_t p : {5, 7, 73, 109, 4273}) {
        const TwinCurve E = make_curve(p);
        for (int64_t ell = 3; ell <= 500; ell += 2) {
            if (!is_prime(uint64_t(ell)) || p % ell == 0 || (p - 2) % ell == 0)
                continue;
            CHECK(a_p(E, ell) == oracles::a_ell_pointcount(E, ell));
        }
    }
}

TEST_CASE("Hasse bound for good primes to 1e5") {
    for (int64_t p : {7, 109}) {
        const TwinCurve E = make_curve(p);
        for (int64_t ell = 3; ell <= 100000; ell += 2) {
            if (!is_prime(uint64_t(ell)) || p % ell == 0 || (p - 2) % ell == 0)
                continue;
            const int64_t a = a_p(E, ell);
            REQUIRE(double(a) * a <= 4.0 * double(ell));
        }
    }
}

TEST_CASE("a_n table recursion and multiplicativity") {
    const TwinCurve E = make_curve(7);
    const auto a = a_n_table(E, 2000);
    CHECK(a[1] == 1);
    CHECK(a[4] == 0);          // a_2 = 0 and 2 is bad, so a_4 = a_2^2
    CHECK(a[6] == a[2] * a[3]);
    CHECK(a[35] == a[5] * a[7]);
    CHECK(a[9] == a[3] * a[3] - 3);  // good prime recursion
    // d(n) sqrt(n) bound
    for (int64_t n = 1; n < 2000; ++n) {
        int64_t d = 0;
        for (int64_t k = 1; k <= n; ++k)
            if (n % k == 0) ++d;
        CHECK(double(a[n]) * a[n] <= double(d) * d * double(n));
    }
}

TEST_CASE("L(1) examples") {
    // rank 0, sign +1: clearly nonzero
    const LValue L73 = L_at_1(make_curve(73), 1e-4);
    CHECK(L73.err <= 1e-4);
    CHECK(std::fabs(L73.value) > 0.1);
    CHECK(std::fabs(L73.value - 1.48101) < 1e-3);

    // sign -1: the functional equation forces zero
    const LValue L109 = L_at_1(make_curve(109), 1e-4);
    CHECK(L109.value == 0.0);
    CHECK(std::fabs(L109.value) <= L109.err + 1e-300);

    // rank 0 twin with p = 7 mod 8
    const LValue L7 = L_at_1(make_curve(7), 1e-4);
    CHECK(std::fabs(L7.value - 1.28933) < 1e-3);
}

TEST_CASE("L'(1) examples") {
    const LValue Lp109 = Lprime_at_1(make_curve(109), 1e-5);
    CHECK(Lp109.err <= 1e-5);
    CHECK(std::fabs(Lp109.value - 7.3247752038636664) <= 1e-5);

    CHECK(Lprime_at_1(make_curve(5), 1e-4).value > 0.5);
    CHECK(Lprime_at_1(make_curve(13), 1e-4).value > 0.5);
    CHECK_THROWS_AS(Lprime_at_1(make_curve(73), 1e-4), std::domain_error);
}

TEST_CASE("error bound shrinks with the target") {
    const TwinCurve E = make_curve(73);
    const LValue coarse = L_at_1(E, 1e-2);
    const LValue fine = L_at_1(E, 1e-6);
    CHECK(fine.err < coarse.err);
    CHECK(fine.n_max > coarse.n_max);
    CHECK(std::fabs(fine.value - coarse.value) <= coarse.err);
}

TEST_CASE("analytic rank classification") {
    CHECK(analytic_rank(make_curve(73)) == AnalyticRank::Zero);
    CHECK(analytic_rank(make_curve(109)) == AnalyticRank::One);
    CHECK(analytic_rank(make_curve(5)) == AnalyticRank::One);
}

TEST_CASE("resource cap is loud") {
    try {
        L_at_1(make_curve(47713), 1e-8, 1000);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        CHECK(e.required_n_max > 1000);
        CHECK(e.cap == 1000);
    }
}

TEST_CASE("sign/value consistency for odd twins") {
    for (const auto& t : twin_pairs(7, 1000)) {
        if (t.p % 8 != 3 && t.p % 8 != 5) continue;
        const LValue L = L_at_1(make_curve(t.p), 1e-3);
        CHECK(std::fabs(L.value) <= L.err + 1e-300);
    }
}

TEST_CASE("a_ell cache roundtrip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "twincurve_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const std::vector<std::pair<uint64_t, int64_t>> entries{
        {2, 0}, {3, -1}, {5, 2}, {7, -1}};
    const std::string path = aell_cache_path(dir.string(), 7, 10);
    write_aell_cache(path, 7, 10, entries);
    const auto back = read_aell_cache(path, 7, 10);
    REQUIRE(back.has_value());
    CHECK(*back == entries);
    CHECK_FALSE(read_aell_cache(path, 11, 10).has_value());  // key mismatch
    CHECK_FALSE(read_aell_cache(path, 7, 20).has_value());

    // end to end: a_n_table writes and reuses the cache
    setenv("TWINCURVE_CACHE_DIR", dir.string().c_str(), 1);
    const auto a1 = a_n_table(make_curve(109), 500);
    CHECK(fs::exists(aell_cache_path(dir.string(), 109, 500)));
    const auto a2 = a_n_table(make_curve(109), 500);
    CHECK(a1 == a2);
    unsetenv("TWINCURVE_CACHE_DIR");
    fs::remove_all(dir);
}

TEST_CASE("build_profile") {
    const LSeriesProfile prof = build_profile(make_curve(73), 1e-4);
    CHECK(prof.sign == 1);
    CHECK(prof.conductor == mpz_class(32) * 73 * 71);
    CHECK(std::fabs(prof.L1 - 1.48101) < 1e-3);
    CHECK(int64_t(prof.a.size()) == prof.n_max + 1);
}
