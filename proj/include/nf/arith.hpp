#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nf/errors.hpp"

namespace nf {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m);

// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set).
bool is_prime(u64 n);

struct Factorization {
    std::vector<std::pair<u64, int>> factors; // sorted by prime
    u64 value() const;
};

// n >= 1; n = 1 yields an empty list. Deterministic (fixed rho constants).
Factorization factorize(u64 n);

u64 isqrt_u64(u64 n);
bool is_square_u64(u64 n);

// Simple sieve; intended for n up to ~10^8.
std::vector<u64> primes_upto(u64 n);

// Calls fn(p) for every prime in [lo, hi], ascending. Segmented, flat memory.
void primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn);

u64 prime_count(u64 lo, u64 hi);

// Jacobi symbol (a|n) for odd n >= 1; throws usage_error on even n.
int jacobi(i64 a, u64 n);

// Tonelli-Shanks. Returns min(r, p-r); nullopt iff a is a non-residue.
// Throws usage_error unless p is an odd prime and 0 <= a < p.
std::optional<u64> sqrt_mod(u64 a, u64 p);

// Smallest-prime-factor table for [0, n]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> spf_table(std::uint32_t n);

} // namespace nf
