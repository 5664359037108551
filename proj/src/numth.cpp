#include "twincurve/numth.hpp"

#include <algorithm>
#include <stdexcept>

namespace twincurve {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool mr_composite(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set is a deterministic witness set for all n < 3.3e24,
    // in particular for the whole uint64 range
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (mr_composite(n, a, d, s)) return false;
    }
    return true;
}

bool is_prime(const mpz_class& n, bool* certain) {
    if (certain) *certain = true;
    if (n < 0) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        return is_prime(static_cast<uint64_t>(mpz_get_ui(n.get_mpz_t())));
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        uint64_t v = mpz_get_ui(n.get_mpz_t());  // low 32 bits on 32-bit longs
        if (sizeof(unsigned long) == 8) return is_prime(v);
    }
    if (certain) *certain = false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<TwinPair> twin_pairs(int64_t lo, int64_t hi) {
    std::vector<TwinPair> out;
    if (hi < 5 || lo > hi) return out;
    lo = std::max<int64_t>(lo, 5);
    if (hi > (int64_t(1) << 33))
        throw std::domain_error("twin_pairs: range end too large for a flat sieve");
    // sieve [0, hi]; we need primality of both p and p-2
    std::vector<uint8_t> comp(static_cast<size_t>(hi) + 1, 0);
    comp[0] = comp[1] = 1;
    for (int64_t i = 2; i * i <= hi; ++i)
        if (!comp[i])
            for (int64_t j = i * i; j <= hi; j += i) comp[j] = 1;
    for (int64_t p = lo | 1; p <= hi; p += 2)
        if (!comp[p] && !comp[p - 2]) out.push_back({p, p - 2});
    return out;
}

int legendre(const mpz_class& a, const mpz_class& ell) {
    if (ell <= 2 || mpz_even_p(ell.get_mpz_t()) || !is_prime(ell))
        throw std::domain_error("legendre: modulus must be an odd prime");
    return mpz_jacobi(a.get_mpz_t(), ell.get_mpz_t());
}

int legendre(int64_t a, int64_t ell) {
    return legendre(mpz_class(a), mpz_class(ell));
}

long valuation(const mpz_class& n, const mpz_class& ell) {
    if (n == 0) throw std::domain_error("valuation: undefined at 0");
    if (ell < 2) throw std::domain_error("valuation: modulus must be a prime");
    mpz_class rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
}

long valuation(const mpq_class& r, const mpz_class& ell) {
    if (r == 0) throw std::domain_error("valuation: undefined at 0");
    return valuation(mpz_class(r.get_num()), ell) -
           valuation(mpz_class(r.get_den()), ell);
}

namespace {

uint64_t pollard_brent(uint64_t n) {
    // Brent's cycle variant; n odd composite, not a prime power of small prime
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
        const uint64_t m = 128;
        uint64_t r = 1;
        auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = f(y);
            for (uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_u64(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    uint64_t d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n_in) {
    if (n_in == 0) throw std::domain_error("factorize: 0 has no factorization");
    mpz_class n = abs(n_in);
    std::vector<std::pair<mpz_class, int>> out;
    auto push = [&](const mpz_class& q, int e) {
        if (!out.empty() && out.back().first == q)
            out.back().second += e;
        else
            out.emplace_back(q, e);
    };
    for (int64_t d = 2; d <= 1'000'000 && mpz_cmp_ui(n.get_mpz_t(), 1) > 0;
         d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
                ++e;
            }
            push(d, e);
        }
        if (d > 2 && mpz_cmp_ui(n.get_mpz_t(), uint64_t(d) * d) < 0) break;
    }
    if (n > 1) {
        if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
            std::vector<uint64_t> fs;
            factor_u64(mpz_get_ui(n.get_mpz_t()), fs);
            std::sort(fs.begin(), fs.end());
            for (uint64_t f : fs) push(mpz_class(static_cast<unsigned long>(f)), 1);
        } else if (is_prime(n)) {
            push(n, 1);
        } else {
            // rho on mpz; rare path (inputs here factor over small primes)
            mpz_class x = 2, y = 2, d = 1, c = 1;
            while (true) {
                x = (x * x + c) % n;
                y = (y * y + c) % n;
                y = (y * y + c) % n;
                mpz_class diff = abs(x - y);
                if (diff == 0) { c += 1; x = y = 2; continue; }
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                if (d > 1 && d < n) break;
            }
            auto left = factorize(d), right = factorize(n / d);
            std::vector<std::pair<mpz_class, int>> merged(left);
            merged.insert(merged.end(), right.begin(), right.end());
            std::sort(merged.begin(), merged.end());
            for (auto& [q, e] : merged) push(q, e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int nu(const mpz_class& n) {
    if (n == 0) throw std::domain_error("nu: undefined at 0");
    if (n == 1 || n == -1) return 0;
    return static_cast<int>(factorize(n).size());
}

}  // namespace twincurve
