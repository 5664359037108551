#include "twincurve/heights.hpp"

#include <cmath>
#include <stdexcept>

#include "twincurve/numth.hpp"

namespace twincurve {

// The height is assembled from per-place telescopes for the duplication map
// in homogeneous coordinates,
//   N(a,b) = a^4 - b4 a^2 b^2 - 2 b6 a b^3 - b8 b^4
//   D(a,b) = 4 a^3 b + b2 a^2 b^2 + 2 b4 a b^3 + b6 b^4,
// starting from the coprime pair (num x, den x):
//   hhat(P) = sum over places v of
//             [ log max(|a0|_v, |b0|_v) + sum_n 4^-(n+1) log s_n^(v) ],
// where s_n^(v) renormalizes the orbit at v. The product formula makes the
// sum independent of the chosen representative pair. Over R the orbit is kept
// at max-norm 1; at a prime q the renormalizer is q^-v_n with
// v_n = min(v_q N, v_q D), and v_n <= v_q(Res(N, D)) = v_q(disc^2) for a
// primitive pair, so only q | disc contribute and window sizes are known
// in advance.

namespace {

double log_mpz(const mpz_class& n) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(d)) + double(e) * std::log(2.0);
}

long valuation_capped(const mpz_class& n, const mpz_class& q, long cap) {
    if (n == 0) return cap;
    mpz_class rest = n;
    long v = 0;
    while (v < cap && mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

struct ArchResult {
    double value;
    double tail_bound;
    double slop;
    int steps;
};

ArchResult arch_telescope(const InvariantSet& inv, const mpz_class& m,
                          const mpz_class& e2, double tol, int max_steps) {
    const long double b2 = mpz_get_d(inv.b2.get_mpz_t());
    const long double b4 = mpz_get_d(inv.b4.get_mpz_t());
    const long double b6 = mpz_get_d(inv.b6.get_mpz_t());
    const long double b8 = mpz_get_d(inv.b8.get_mpz_t());
    // sum of |coefficients|: bounds |N|, |D| on the unit box
    const long double theta =
        1 + fabsl(b4) + 2 * fabsl(b6) + fabsl(b8) + 4 + fabsl(b2) + 2 * fabsl(b4);

    ArchResult r{0.0, 0.0, 0.0, 0};
    const mpz_class am = abs(m);
    const mpz_class& scale = (am > e2) ? am : e2;  // > 0 since e2 >= 1
    r.value = log_mpz(scale);

    // normalized start (|a|, |b| <= 1)
    mpq_class qa(m, scale), qb(e2, scale);
    qa.canonicalize();
    qb.canonicalize();
    long double a = mpq_get_d(qa.get_mpq_t());
    long double b = mpq_get_d(qb.get_mpq_t());

    long double w = 1.0L;
    double smax = 1.0;
    const long double eps = 1.1e-19L;  // x86 long double ulp scale
    for (int n = 0; n < max_steps; ++n) {
        w /= 4.0L;
        const long double a2v = a * a, b2v = b * b;
        const long double A =
            a2v * a2v - b4 * a2v * b2v - 2 * b6 * a * b * b2v - b8 * b2v * b2v;
        const long double B = 4 * a2v * a * b + b2 * a2v * b2v +
                              2 * b4 * a * b * b2v + b6 * b2v * b2v;
        const long double s = std::max(fabsl(A), fabsl(B));
        if (!(s > 0))
            throw std::runtime_error("canonical_height: orbit collapsed");
        r.value += double(w * logl(s));
        r.slop += double(w) * double(16.0L * eps * theta / s) * (n + 2);
        a = A / s;
        b = B / s;
        smax = std::max(smax, std::fabs(double(logl(s))));
        r.steps = n + 1;
        // remaining tail: increments bounded by the largest |log s| seen (+1)
        r.tail_bound = double(w) / 3.0 * (smax + 1.0);
        if (r.tail_bound < tol && n >= 8) break;
    }
    return r;
}

struct PadicResult {
    double value;
    double tail_bound;
};

PadicResult padic_telescope(const InvariantSet& inv, const mpz_class& m,
                            const mpz_class& e2, const mpz_class& q,
                            double tol) {
    const long R = 2 * valuation(inv.disc, q);  // v_q(Res) = v_q(disc^2)
    const double logq = log_mpz(q);
    PadicResult r{0.0, 0.0};
    if (R == 0) return r;
    // steps so that 4^-n R log q / 3 <= tol
    int steps = 1;
    while (std::pow(0.25, steps) * double(R) * logq / 3.0 > tol && steps < 64)
        ++steps;
    const long K = (steps + 1) * R + 16;  // worst case loses R digits per step
    mpz_class mod;
    mpz_pow_ui(mod.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(K));
    mpz_class a = m % mod, b = e2 % mod;
    if (a < 0) a += mod;
    long prec = K;
    double w = 1.0;
    for (int n = 0; n < steps; ++n) {
        w /= 4.0;
        const mpz_class a2v = a * a % mod, b2v = b * b % mod;
        mpz_class A = (a2v * a2v - inv.b4 * a2v % mod * b2v -
                       2 * inv.b6 * a % mod * b % mod * b2v -
                       inv.b8 * b2v % mod * b2v) % mod;
        mpz_class B = (4 * a2v * a % mod * b + inv.b2 * a2v % mod * b2v +
                       2 * inv.b4 * a % mod * b % mod * b2v +
                       inv.b6 * b2v % mod * b2v) % mod;
        if (A < 0) A += mod;
        if (B < 0) B += mod;
        const long v = std::min(valuation_capped(A, q, R + 1),
                                valuation_capped(B, q, R + 1));
        if (v > R)
            throw std::logic_error(
                "canonical_height: local valuation exceeds the resultant bound");
        r.value -= w * double(v) * logq;
        if (v > 0) {
            mpz_class qe;
            mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(v));
            mpz_divexact(A.get_mpz_t(), A.get_mpz_t(), qe.get_mpz_t());
            mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), qe.get_mpz_t());
            prec -= v;
            if (prec <= R + 2)
                throw std::logic_error("canonical_height: q-adic window exhausted");
        }
        a = A;
        b = B;
    }
    r.tail_bound = std::pow(0.25, steps) * double(R) * logq / 3.0;
    return r;
}

}  // namespace

HeightReport canonical_height(const RationalPoint& P, double tol) {
    if (!(tol > 0))
        throw std::domain_error("canonical_height: tol must be > 0");
    HeightReport rep;
    if (P.infinity) {
        rep.method = "torsion";
        return rep;  // hhat(O) = 0 exactly
    }
    rep.naive = naive_height(P);
    const TwinCurve E = make_curve(P.curve_p);
    const InvariantSet inv = invariants(E);
    const mpz_class m = P.x.get_num(), e2 = P.x.get_den();

    const auto primes = factorize(inv.disc);
    const double tol_arch = tol / 4.0;
    const double tol_q = tol / (4.0 * double(primes.size() + 1));

    const ArchResult arch = arch_telescope(inv, m, e2, tol_arch, 64);
    double value = arch.value;
    double err = arch.tail_bound + arch.slop;
    for (const auto& [q, e] : primes) {
        const PadicResult pr = padic_telescope(inv, m, e2, q, tol_q);
        value += pr.value;
        err += pr.tail_bound;
    }
    rep.canonical = value;
    rep.error_bound = err;
    rep.steps = arch.steps;
    if (err > tol)
        throw std::runtime_error(
            "canonical_height: could not reach the requested tolerance; "
            "achieved " + std::to_string(err) + " with estimate " +
            std::to_string(value));
    return rep;
}

double height_pairing(const RationalPoint& P, const RationalPoint& Q,
                      double tol) {
    const RationalPoint S = add(P, Q);
    const double hS = canonical_height(S, tol / 2).canonical;
    const double hP = canonical_height(P, tol / 2).canonical;
    const double hQ = canonical_height(Q, tol / 2).canonical;
    return (hS - hP - hQ) / 2.0;
}

}  // namespace twincurve
