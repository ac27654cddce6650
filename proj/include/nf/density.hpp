#pragma once
#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "nf/field.hpp"
#include "nf/perm.hpp"
#include "nf/represent.hpp"
#include "nf/splitting.hpp"

namespace nf {

struct DensityEstimate {
    u64 count = 0;
    u64 total = 0;   // tested minus skipped
    u64 skipped = 0; // unknown verdicts, excluded from the ratio
    u64 bound = 0;
    double ratio() const { return total ? (double)count / (double)total : 0.0; }
};

// Fraction of primes (respectively integers 1..X) with a yes verdict; the
// predicate must be safe to call concurrently. Results are independent of
// the thread count.
DensityEstimate empirical_prime_density(const std::function<Verdict3(u64)>& pred, u64 x,
                                        int threads);
DensityEstimate empirical_integer_density(const std::function<Verdict3(u64)>& pred, u64 x,
                                          int threads);

// prod over p in ps of (p^2 - (p - 1)) / p^2, kept unreduced so the factor
// structure stays visible; empty product is 1/1. Throws usage_error on
// repeats or non-primes.
struct SieveBound {
    mpz_class num = 1;
    mpz_class den = 1;
    mpq_class value() const {
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    std::string str() const { return num.get_str() + "/" + den.get_str(); }
};

SieveBound sieve_bound(const std::vector<u64>& ps);

struct DivergencePoint {
    u64 x = 0;
    double sum = 0.0; // sum of 1/p over high primes p <= x
    u64 count = 0;
};

// Checkpoints must be strictly ascending. Partial sums are accumulated in a
// fixed chunk order, so results are thread-count independent.
std::vector<DivergencePoint> divergence_curve(const NumberField& nf,
                                              const std::vector<u64>& checkpoints, u64 seed,
                                              int threads);

struct ChebotarevRow {
    std::vector<int> type; // factor-degree multiset, ascending
    u64 count = 0;
    double empirical = 0.0;
    mpq_class theoretical;
};

struct ChebotarevTable {
    std::vector<ChebotarevRow> rows; // sorted by type
    u64 total = 0;
    u64 skipped = 0; // primes dividing disc(f)
    u64 bound = 0;
};

// Compares factorization-pattern frequencies over primes up to x against the
// class densities of the Galois group.
ChebotarevTable chebotarev_table(NumberField& nf, u64 x, u64 seed, int threads);

struct APWitness {
    u64 a = 0;
    u64 q = 0;
    int k = 0;
    std::vector<u64> members;
};

// Least (q, a) in lexicographic order with a, a+q, ..., a+(k-1)q all set in
// the bitmap and a+(k-1)q <= n. Requires k >= 3.
std::optional<APWitness> ap_search(const std::vector<u64>& bits, u64 n, int k);

} // namespace nf
