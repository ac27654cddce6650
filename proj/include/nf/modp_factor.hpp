#pragma once
#include <optional>
#include <vector>

#include "nf/poly.hpp"

namespace nf {

struct ModFactorization {
    u64 p = 0;
    u64 unit = 1; // leading coefficient of the input
    std::vector<std::pair<ModPoly, int>> factors; // monic irreducible, canonical order
    ModPoly product() const; // unit * prod factors^e
};

// Multiplicity-graded squarefree decomposition in characteristic p.
// Parts are monic, pairwise coprime, squarefree; product with multiplicities
// reconstructs f up to the leading unit. Throws usage_error on zero input.
std::vector<std::pair<ModPoly, int>> squarefree_decompose(const ModPoly& f);

// (product of all monic irreducible factors of degree k, k) for squarefree
// monic input; throws usage_error otherwise.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f);

// Full factorization; byte-identical output for identical (f, p, seed).
ModFactorization factor(const ModPoly& f, u64 seed);

// Degrees (with multiplicity from equal-degree counts) of the irreducible
// factors of f mod p, ascending, when f mod p is squarefree of full degree;
// nullopt otherwise. Cheap: no equal-degree splitting.
std::optional<std::vector<int>> cycle_type_mod_p(const IntPoly& f, u64 p);

} // namespace nf
