#pragma once
#include <gmpxx.h>

#include <vector>

#include "nf/arith.hpp"

namespace nf {

struct QuadForm {
    i64 a = 0, b = 0, c = 0;

    i64 disc() const;
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// D ≡ 0 or 1 (mod 4) and not a perfect square.
bool is_discriminant(i64 D);
bool is_fundamental_discriminant(i64 D);

QuadForm principal_form(i64 D);

// Gauss reduction. Throws usage_error unless positive definite (D < 0, a > 0).
QuadForm reduce_definite(QuadForm f);

// D > 0: reduced means 0 < b ≤ s, 2|a| − b ≤ s < 2|a| + b, with s = isqrt(D).
bool is_reduced_indefinite(const QuadForm& f);

// One rho step (sign-alternating continued-fraction reduction).
QuadForm rho(const QuadForm& f);

// Walks rho to a reduced form (identity on definite input after reduction).
QuadForm reduce_any(QuadForm f);

// The full rho-cycle through a reduced indefinite form.
std::vector<QuadForm> cycle_of(const QuadForm& reduced);

// Canonical class representative: the reduced form (definite) or the
// lexicographically least member of the rho-cycle (indefinite).
QuadForm class_rep(const QuadForm& f);

// Dirichlet composition, canonically reduced. Throws usage_error on
// mismatched discriminants.
QuadForm compose(const QuadForm& f1, const QuadForm& f2);

QuadForm inverse_form(const QuadForm& f);

struct ClassGroupQ {
    i64 D = 0;
    std::vector<QuadForm> reps; // canonical class representatives, sorted
    long long h_narrow = 0;     // |reps|; form class number
    long long h = 0;            // ideal class number
    bool s_principal = false;   // the class of (-1, b0, -c0) is the identity
    QuadForm principal;         // canonical identity representative
    QuadForm s_rep;             // canonical representative of the s-class
};

// Memoized. Throws usage_error on a non-discriminant or non-fundamental D,
// guard_error when |D| > 10^8.
const ClassGroupQ& class_group(i64 D);

// Ideal class number of the maximal order of discriminant D.
long long class_number(i64 D);

struct PellData {
    u64 a = 0;
    int period = 0;
    mpz_class x0, y0;
    int norm_sign = 0; // x0^2 - a y0^2
};

// Continued-fraction expansion of sqrt(a). Throws usage_error on squares.
PellData pell_solve(u64 a);

// Kronecker symbol (D | p) for prime p.
int kronecker_at_prime(i64 D, u64 p);

struct PrimeRep {
    bool yes = false;
    // +1: +p attained (and -p is not); -1: only -p; 0: both signs attained.
    int sign = 0;
};

// Whether |principal form| takes the value p. Fundamental D only.
PrimeRep represents_prime_principal(i64 D, u64 p);

// Whether |principal form| takes the value n >= 1 (class-group subset product
// over the primes of n). Fundamental D only.
bool represents_integer_principal(i64 D, u64 n);

} // namespace nf
