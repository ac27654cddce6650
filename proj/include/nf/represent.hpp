#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nf/field.hpp"
#include "nf/splitting.hpp"

namespace nf {

// Membership verdict for N_psi / P_psi with provenance.
struct Verdict {
    Verdict3 kind = Verdict3::unknown;
    std::optional<std::vector<mpz_class>> witness; // |psi(witness)| = n when present
    std::string route; // "quadratic-forms", "class-number-one", "search"
    int sign = 0;      // indefinite d=2 transparency: +1 only +n, -1 only -n, 0 both
};

// Throws usage_error on composite p. `with_witness` controls whether exact
// yes verdicts also search for a coordinate witness.
Verdict is_norm_prime(const NumberField& nf, u64 p, u64 seed, bool with_witness = true);

// Throws usage_error when n < 1.
Verdict is_norm_integer(const NumberField& nf, u64 n, u64 seed, bool with_witness = true);

// Scans the half box (first nonzero coordinate positive) with |v_i| <= B for
// |psi(v)| = n; positive values preferred. nullopt means exhausted, never no.
std::optional<std::vector<mpz_class>> brute_force_search(const NumberField& nf,
                                                         const mpz_class& n, long long B);

struct FilterResult {
    bool pass = true;
    u64 p = 0; // the certifying prime on failure
};

// Certificate of non-membership: some High prime divides n exactly once.
FilterResult lemma21_filter(const NumberField& nf, u64 n, u64 seed);

// bit n set (1 <= n <= N) iff |psi(v)| = n for some v in the half box
// |v_i| <= B. Throws guard_error when coefficient-sum * B^d risks overflow.
std::vector<u64> norm_values_bitmap(const NumberField& nf, u64 N, long long B);

inline bool bitmap_get(const std::vector<u64>& bits, u64 n) {
    return (bits[n >> 6] >> (n & 63)) & 1;
}

// Default search box for degree-d targets.
long long default_box(const NumberField& nf, u64 n);

} // namespace nf
