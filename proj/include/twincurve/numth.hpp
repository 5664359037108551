#ifndef TWINCURVE_NUMTH_HPP
#define TWINCURVE_NUMTH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twincurve {

// A pair of twin primes (p, p-2); p is the leader.
struct TwinPair {
    int64_t p;
    int64_t q;  // = p - 2
};

// Deterministic for all n < 2^64.
bool is_prime(uint64_t n);

// Above 2^64 this is a strong probable-prime test (40 Miller-Rabin rounds);
// *certain is set to false in that case.
bool is_prime(const mpz_class& n, bool* certain = nullptr);

// All twin leaders p in [lo, hi] with p and p-2 prime, ascending.
// An empty range yields an empty list.
std::vector<TwinPair> twin_pairs(int64_t lo, int64_t hi);

// Legendre symbol (a/ell); ell must be an odd prime, else std::domain_error.
// 0 iff ell | a, +1 for nonzero squares mod ell, -1 otherwise.
int legendre(const mpz_class& a, const mpz_class& ell);
int legendre(int64_t a, int64_t ell);

// ell-adic valuation of a nonzero integer/rational (negative for rationals
// with ell in the denominator). n = 0 -> std::domain_error.
long valuation(const mpz_class& n, const mpz_class& ell);
long valuation(const mpq_class& r, const mpz_class& ell);

// (prime, exponent) factorization, primes ascending.
// Trial division to 10^6, then Pollard-Brent rho.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n);

// Number of distinct prime divisors of |n|; nu(+-1) = 0; n = 0 -> domain_error.
int nu(const mpz_class& n);

}  // namespace twincurve

#endif
