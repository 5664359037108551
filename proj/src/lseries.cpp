#include "twincurve/lseries.hpp"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "twincurve/aell_kernel.hpp"
#include "twincurve/expint.hpp"
#include "twincurve/numth.hpp"
#include "twincurve/reduction.hpp"
#include "twincurve/rootnumber.hpp"

namespace twincurve {

ResourceLimitError::ResourceLimitError(int64_t need, int64_t cap_)
    : std::runtime_error("series cap exceeded: would need n_max = " +
                         std::to_string(need) + " > cap " + std::to_string(cap_)),
      required_n_max(need),
      cap(cap_) {}

int64_t a_p(const TwinCurve& E, int64_t ell) {
    if (ell < 2 || !is_prime(static_cast<uint64_t>(ell)))
        throw std::domain_error("a_p: ell must be prime");
    if (ell == 2) return 0;  // additive (type III)
    if (E.p % ell == 0) return legendre(int64_t(-2), ell) == 1 ? +1 : -1;
    if ((E.p - 2) % ell == 0) return legendre(int64_t(2), ell) == 1 ? +1 : -1;
    const uint32_t m = static_cast<uint32_t>(ell);
    const uint32_t a2 = static_cast<uint32_t>(((E.a2 % ell) + ell) % ell);
    const uint32_t a4 = static_cast<uint32_t>(((E.a4 % ell) + ell) % ell);
    return -curve_char_sum(m, a2, a4);
}

namespace {

// primes and a_ell for ell <= n_max, with optional disk cache
std::vector<std::pair<uint64_t, int64_t>> aell_list(const TwinCurve& E,
                                                    int64_t n_max) {
    std::string path;
    if (const char* dir = std::getenv("TWINCURVE_CACHE_DIR")) {
        path = aell_cache_path(dir, E.p, n_max);
        if (auto cached = read_aell_cache(path, E.p, n_max)) return *cached;
    }
    std::vector<std::pair<uint64_t, int64_t>> out;
    std::vector<uint8_t> comp(static_cast<size_t>(n_max) + 1, 0);
    for (int64_t i = 2; i * i <= n_max; ++i)
        if (!comp[i])
            for (int64_t j = i * i; j <= n_max; j += i) comp[j] = 1;
    for (int64_t ell = 2; ell <= n_max; ++ell)
        if (!comp[ell]) out.emplace_back(uint64_t(ell), a_p(E, ell));
    if (!path.empty()) write_aell_cache(path, E.p, n_max, out);
    return out;
}

}  // namespace

std::vector<int32_t> a_n_table(const TwinCurve& E, int64_t n_max) {
    if (n_max < 1) throw std::domain_error("a_n_table: n_max must be >= 1");
    std::vector<int32_t> a(static_cast<size_t>(n_max) + 1, 0);
    a[1] = 1;
    std::vector<uint32_t> spf(static_cast<size_t>(n_max) + 1, 0);
    for (int64_t i = 2; i <= n_max; ++i)
        if (!spf[i])
            for (int64_t j = i; j <= n_max; j += i)
                if (!spf[j]) spf[j] = static_cast<uint32_t>(i);
    for (const auto& [ellu, al] : aell_list(E, n_max)) {
        const int64_t ell = static_cast<int64_t>(ellu);
        const bool bad = (ell == 2 || E.p % ell == 0 || (E.p - 2) % ell == 0);
        int64_t pw = ell;
        int k = 1;
        while (pw <= n_max) {
            if (bad)
                a[pw] = static_cast<int32_t>(k == 1 ? al : al * a[pw / ell]);
            else if (k == 1)
                a[pw] = static_cast<int32_t>(al);
            else
                a[pw] = static_cast<int32_t>(al * a[pw / ell] -
                                             ell * a[pw / (ell * ell)]);
            if (pw > n_max / ell) break;
            pw *= ell;
            ++k;
        }
    }
    // multiplicative fill via smallest prime factor
    for (int64_t n = 2; n <= n_max; ++n) {
        if (a[n] != 0) continue;
        const int64_t q = spf[n];
        int64_t pw = q, rest = n / q;
        while (rest % q == 0) { pw *= q; rest /= q; }
        if (rest > 1) a[n] = a[pw] * a[rest];
    }
    return a;
}

namespace {

// with |a_n| <= d(n) sqrt(n) < 2n, the tail past M of sum (a_n/n) e^(-cn)
// is below 2 e^(-c(M+1)) / (1 - e^(-c))
double exp_tail_bound(double c, int64_t M) {
    return 2.0 * std::exp(-c * double(M + 1)) / (1.0 - std::exp(-c));
}

// E1(x) < e^-x / x gives the tail for the derivative series
double e1_tail_bound(double c, int64_t M) {
    return exp_tail_bound(c, M) / (c * double(M + 1));
}

int64_t choose_n_max(double c, double target, int64_t cap,
                     double (*tail)(double, int64_t)) {
    int64_t hi = 1;
    while (tail(c, hi) > target && hi <= 4 * cap) hi *= 2;
    int64_t lo = 1;
    while (lo < hi) {
        const int64_t mid = lo + (hi - lo) / 2;
        if (tail(c, mid) <= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo > cap || tail(c, lo) > target) throw ResourceLimitError(lo, cap);
    return lo;
}

double conductor_sqrt(const TwinCurve& E) {
    return std::sqrt(conductor(E).get_d());
}

struct SeriesEval {
    LValue v;
    std::vector<int32_t> table;
};

// even sign: L(1) = 2 sum (a_n/n) e^(-cn)
SeriesEval eval_L(const TwinCurve& E, double target_err, int64_t cap) {
    const double c = 2.0 * M_PI / conductor_sqrt(E);
    SeriesEval r;
    r.v.n_max = choose_n_max(c, target_err / 2.0, cap, &exp_tail_bound);
    r.table = a_n_table(E, r.v.n_max);
    long double sum = 0.0L;
    for (int64_t n = 1; n <= r.v.n_max; ++n) {
        if (r.table[n] == 0) continue;
        sum += (long double)(r.table[n]) / n * std::exp(-c * double(n));
    }
    r.v.value = 2.0 * double(sum);
    r.v.err = 2.0 * exp_tail_bound(c, r.v.n_max) + 1e-15 * double(r.v.n_max) + 1e-12;
    return r;
}

// odd sign: L'(1) = 2 sum (a_n/n) E1(cn)
SeriesEval eval_Lprime(const TwinCurve& E, double target_err, int64_t cap) {
    const double c = 2.0 * M_PI / conductor_sqrt(E);
    SeriesEval r;
    r.v.n_max = choose_n_max(c, target_err / 2.0, cap, &e1_tail_bound);
    r.table = a_n_table(E, r.v.n_max);
    long double sum = 0.0L;
    for (int64_t n = 1; n <= r.v.n_max; ++n) {
        if (r.table[n] == 0) continue;
        const double x = c * double(n);
        if (x > 745.0) break;  // E1 underflows; already inside the tail bound
        sum += (long double)(r.table[n]) / n * exp_int_e1(x);
    }
    r.v.value = 2.0 * double(sum);
    r.v.err = 2.0 * e1_tail_bound(c, r.v.n_max) + 1e-15 * double(r.v.n_max) + 1e-12;
    return r;
}

}  // namespace

LValue L_at_1(const TwinCurve& E, double target_err, int64_t cap) {
    if (!(target_err > 0)) throw std::domain_error("L_at_1: target_err must be > 0");
    if (global_root_number(E).w_global == -1) {
        // L(1) = (1 + w) * sum: the odd functional equation forces the zero
        return LValue{0.0, 0.0, 0};
    }
    return eval_L(E, target_err, cap).v;
}

LValue Lprime_at_1(const TwinCurve& E, double target_err, int64_t cap) {
    if (!(target_err > 0))
        throw std::domain_error("Lprime_at_1: target_err must be > 0");
    if (global_root_number(E).w_global != -1)
        throw std::domain_error("Lprime_at_1: defined here only for sign -1");
    return eval_Lprime(E, target_err, cap).v;
}

AnalyticRank analytic_rank(const TwinCurve& E, double zero_tol, int64_t cap) {
    if (!(zero_tol > 0))
        throw std::domain_error("analytic_rank: zero_tol must be > 0");
    if (global_root_number(E).w_global == +1) {
        const LValue L = L_at_1(E, zero_tol / 10.0, cap);
        if (L.err >= zero_tol) throw ResourceLimitError(L.n_max, cap);
        return std::fabs(L.value) > zero_tol ? AnalyticRank::Zero
                                             : AnalyticRank::EvenAtLeastTwo;
    }
    const LValue Lp = Lprime_at_1(E, zero_tol / 10.0, cap);
    if (Lp.err >= zero_tol) throw ResourceLimitError(Lp.n_max, cap);
    return std::fabs(Lp.value) > zero_tol
               ? AnalyticRank::One
               : AnalyticRank::OddAtLeastThreeUndetected;
}

const char* to_string(AnalyticRank r) {
    switch (r) {
        case AnalyticRank::Zero: return "0";
        case AnalyticRank::One: return "1";
        case AnalyticRank::EvenAtLeastTwo: return "even>=2";
        case AnalyticRank::OddAtLeastThreeUndetected: return "odd>=3 (undetected)";
    }
    return "?";
}

LSeriesProfile build_profile(const TwinCurve& E, double target_err, int64_t cap) {
    LSeriesProfile prof;
    prof.conductor = conductor(E);
    prof.sign = global_root_number(E).w_global;
    if (prof.sign == +1) {
        SeriesEval r = eval_L(E, target_err, cap);
        prof.L1 = r.v.value;
        prof.L1_err = r.v.err;
        prof.n_max = r.v.n_max;
        prof.a = std::move(r.table);
    } else {
        SeriesEval r = eval_Lprime(E, target_err, cap);
        prof.Lp1 = r.v.value;
        prof.Lp1_err = r.v.err;
        prof.n_max = r.v.n_max;
        prof.a = std::move(r.table);
        prof.L1 = 0.0;
        prof.L1_err = 0.0;  // exact zero for odd sign
    }
    return prof;
}

// --- cache ------------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'T', 'W', 'A', 'E', 'L', 'C', 'V', '1'};

void put_u64(std::string& buf, uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

uint64_t get_u64(const char* b) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(uint8_t(b[i])) << (8 * i);
    return v;
}

}  // namespace

std::string aell_cache_path(const std::string& dir, int64_t p, int64_t ell_max) {
    return dir + "/aell_" + std::to_string(p) + "_" + std::to_string(ell_max) +
           ".bin";
}

void write_aell_cache(const std::string& path, int64_t p, int64_t ell_max,
                      const std::vector<std::pair<uint64_t, int64_t>>& entries) {
    std::string buf;
    buf.reserve(32 + entries.size() * 16);
    buf.append(kMagic, 8);
    put_u64(buf, uint64_t(p));
    put_u64(buf, uint64_t(ell_max));
    put_u64(buf, entries.size());
    for (const auto& [ell, a] : entries) {
        put_u64(buf, ell);
        put_u64(buf, uint64_t(a));
    }
    std::error_code ec;
    std::filesystem::create_directories(
        std::filesystem::path(path).parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return;  // caching is best-effort
    out.write(buf.data(), std::streamsize(buf.size()));
}

std::optional<std::vector<std::pair<uint64_t, int64_t>>>
read_aell_cache(const std::string& path, int64_t p, int64_t ell_max) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string buf((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    if (buf.size() < 32 || std::memcmp(buf.data(), kMagic, 8) != 0)
        return std::nullopt;
    if (get_u64(buf.data() + 8) != uint64_t(p)) return std::nullopt;
    if (get_u64(buf.data() + 16) != uint64_t(ell_max)) return std::nullopt;
    const uint64_t count = get_u64(buf.data() + 24);
    if (buf.size() != 32 + count * 16) return std::nullopt;
    std::vector<std::pair<uint64_t, int64_t>> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        const char* rec = buf.data() + 32 + i * 16;
        out.emplace_back(get_u64(rec), int64_t(get_u64(rec + 8)));
    }
    return out;
}

}  // namespace twincurve
