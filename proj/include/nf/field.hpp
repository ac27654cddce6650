#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nf/perm.hpp"
#include "nf/poly.hpp"

namespace nf {

struct FieldSpec {
    IntPoly f; // monic, irreducible, degree d >= 2
    // basis[i] = coordinates of omega_{i+1} in the power basis (1, th, ..., th^{d-1});
    // empty means the identity (power) basis.
    std::vector<std::vector<mpq_class>> basis;
    std::optional<long long> class_number;
    std::optional<std::vector<Perm>> group; // generators acting on the d roots
    std::string label;
};

struct ValidationReport {
    bool irreducibility_certified = false;
    std::vector<std::string> warnings;
};

// A validated field with its norm form and multiplication structure.
struct NumberField {
    FieldSpec spec;
    int d = 0;
    mpz_class disc_f;
    bool identity_basis = true;
    // structure constants: omega_i * omega_j = sum_k sc[i][j][k] omega_k
    std::vector<std::vector<std::vector<mpz_class>>> sc;
    // regrep[i][r][c]: matrix of multiplication by omega_i in the basis
    std::vector<std::vector<std::vector<mpz_class>>> regrep;
    MultiPoly psi;
    // disc(f) * det(B)^2: discriminant of the basis lattice (exact integer)
    mpz_class basis_disc;
    std::optional<PermGroup> galois; // supplied closure or small-degree derived
    ValidationReport report;
};

// Validates and builds. Throws spec_error on hard failures (non-monic f,
// provably reducible f, singular basis, non-integral structure constants,
// bad group data, d=2 class number mismatch).
NumberField validate_and_build(const FieldSpec& spec);

// Exact evaluation of psi.
mpz_class eval_norm(const NumberField& nf, const std::vector<mpz_class>& v);

// Independent evaluation: integer determinant of sum v_i * regrep[i].
mpz_class eval_norm_numeric(const NumberField& nf, const std::vector<mpz_class>& v);

// Coordinates of (sum u_i omega_i)(sum v_j omega_j) in the basis.
std::vector<mpz_class> basis_product(const NumberField& nf,
                                     const std::vector<mpz_class>& u,
                                     const std::vector<mpz_class>& v);

// The Galois group: supplied with the spec, or derived for degree 2..4.
// Throws usage_error when unavailable.
const PermGroup& galois_group(NumberField& nf);

} // namespace nf
