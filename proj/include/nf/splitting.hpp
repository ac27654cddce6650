#pragma once
#include <vector>

#include "nf/field.hpp"

namespace nf {

// (e, f) pairs from the mod-p factorization of the defining polynomial,
// trusted only when the index test certifies p coprime to [O_K : Z[theta]].
struct SplittingType {
    u64 p = 0;
    std::vector<std::pair<int, int>> pairs; // (e, f), sorted by (f, e)
    bool exceptional = false;               // pairs empty when set

    bool has_f1() const {
        for (auto& [e, f] : pairs)
            if (f == 1) return true;
        return false;
    }
};

enum class Verdict3 { yes, no, unknown };
enum class PrimeClass { Low, High, Exceptional };

enum class DedekindResult { index_coprime, index_divisible };

// Dedekind's criterion: whether p divides [O_K : Z[theta]] for monic f.
DedekindResult dedekind_index_test(const IntPoly& f, u64 p);

// Throws usage_error when p is composite.
SplittingType splitting_type(const NumberField& nf, u64 p, u64 seed);

Verdict3 has_degree_one(const NumberField& nf, u64 p, u64 seed);

PrimeClass classify(const NumberField& nf, u64 p, u64 seed);

// Numerical-semigroup membership: e = sum of elements of `degrees` with
// repetition allowed. Throws usage_error on an empty generator set.
bool inertia_degree_monoid_member(const std::vector<int>& degrees, int e);

const char* to_string(Verdict3 v);
const char* to_string(PrimeClass c);

} // namespace nf
