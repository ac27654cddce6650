#include "nf/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nf {

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 Factorization::value() const {
    u64 v = 1;
    for (auto& [p, e] : factors)
        for (int i = 0; i < e; i++) v *= p;
    return v;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; s++; }
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; i++) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle variant of Pollard rho with a fixed constant sequence, so
// factorizations are identical run to run.
u64 brent_rho(u64 n) {
    if (!(n & 1)) return 2;
    for (u64 c = 1;; c++) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; i++) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                int lim = std::min(128, lam - k);
                u64 ys = y;
                for (int i = 0; i < lim; i++) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    while (d == 1) {
                        y = (mulmod(y, y, n) + c) % n;
                        d = std::gcd(x > y ? x - y : y - x, n);
                    }
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin(n, a)) return false;
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw usage_error("factorize: n must be >= 1");
    Factorization f;
    if (n == 1) return f;
    std::vector<u64> ps;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull,
                  61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
        while (n % p == 0) { ps.push_back(p); n /= p; }
    }
    factor_rec(n, ps);
    std::sort(ps.begin(), ps.end());
    for (u64 p : ps) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second++;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    // the double estimate can land one high near 2^64, where r*r wraps
    u64 r = (u64)std::sqrt((double)n);
    if (r > 4294967295ull) r = 4294967295ull;
    while (r > 0 && (u128)r * r > n) r--;
    while ((u128)(r + 1) * (r + 1) <= n) r++;
    return r;
}

bool is_square_u64(u64 n) {
    u64 r = isqrt_u64(n);
    return r * r == n;
}

std::vector<u64> primes_upto(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i * i <= n; i++)
        if (!comp[i])
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    for (u64 i = 2; i <= n; i++)
        if (!comp[i]) out.push_back(i);
    return out;
}

void primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (lo < 2) lo = 2;
    if (lo > hi) return;
    const u64 seg = 1u << 20;
    std::vector<u64> base = primes_upto(isqrt_u64(hi));
    std::vector<bool> mark;
    for (u64 start = lo; start <= hi; start += seg) {
        u64 end = std::min(hi, start + seg - 1);
        mark.assign(end - start + 1, true);
        for (u64 p : base) {
            if (p * p > end) break;
            u64 first = std::max(p * p, ((start + p - 1) / p) * p);
            for (u64 j = first; j <= end; j += p) mark[j - start] = false;
        }
        for (u64 v = start; v <= end; v++)
            if (mark[v - start]) fn(v);
        if (end == hi) break; // avoid overflow of start += seg
    }
}

u64 prime_count(u64 lo, u64 hi) {
    u64 c = 0;
    primes_in(lo, hi, [&](u64) { c++; });
    return c;
}

int jacobi(i64 a, u64 n) {
    if (n % 2 == 0) throw usage_error("jacobi: n must be odd");
    i64 nn = (i64)n;
    a %= nn;
    if (a < 0) a += nn;
    int result = 1;
    i64 m = nn;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw usage_error("sqrt_mod: p must be an odd prime");
    if (a >= p) throw usage_error("sqrt_mod: need 0 <= a < p");
    if (a == 0) return 0;
    if (jacobi((i64)a, p) != 1) return std::nullopt;
    u64 r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = 0;
        while (!(q & 1)) { q >>= 1; s++; }
        u64 z = 2;
        while (jacobi((i64)z, p) != -1) z++;
        u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 tt = t;
            u64 i = 0;
            while (tt != 1) { tt = mulmod(tt, tt, p); i++; }
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; j++) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    return std::min(r, p - r);
}

std::vector<std::uint32_t> spf_table(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; i++) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

} // namespace nf
