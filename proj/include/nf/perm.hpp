#pragma once
#include <gmpxx.h>

#include <map>
#include <vector>

#include "nf/poly.hpp"

namespace nf {

// A permutation on d points, stored as 0-indexed images; serialized 1-indexed.
using Perm = std::vector<int>;

Perm perm_identity(int d);
Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
std::vector<int> cycle_type(const Perm& a); // partition of d, ascending

struct PermGroup {
    int degree = 0;
    std::vector<Perm> elements; // sorted; full closure
    std::vector<Perm> generators;
    bool contains(const Perm& g) const;
    size_t order() const { return elements.size(); }
};

// Breadth-first closure; guard at 10^6 elements (guard_error beyond).
PermGroup close(int degree, const std::vector<Perm>& generators);

bool is_transitive(const PermGroup& g);

struct ConjClass {
    Perm rep; // lexicographically least member
    std::vector<Perm> members;
    std::vector<int> type; // cycle type, ascending
};

// Partition of G; ordered by (cycle type, then representative), both ascending.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

// Elements fixing `point` (0-indexed).
PermGroup point_stabilizer(const PermGroup& g, int point);

// True when every element of h lies in g, i.e. h <= g.
bool is_subgroup_of(const PermGroup& h, const PermGroup& g);

std::vector<ConjClass> classes_missing_subgroup(const PermGroup& g, const PermGroup& h);

// Lemma-style witness: some class disjoint from proper H. Throws usage_error
// when H is not a proper subgroup.
ConjClass missing_class_witness(const PermGroup& g, const PermGroup& h);

struct TheoreticalDensities {
    std::vector<std::pair<std::vector<int>, mpq_class>> per_class; // (cycle type, |C|/|G|)
    std::map<std::vector<int>, mpq_class> by_type; // aggregated over classes
    std::map<std::vector<int>, bool> type_meets_h; // any class of this type meets H
    mpq_class d_low, d_high;
};

// G transitive, H = point stabilizer: d_low = sum over classes meeting H.
TheoreticalDensities theoretical_densities(const PermGroup& g, const PermGroup& h);

// All subgroups (brute force; |G| <= 24 intended).
std::vector<PermGroup> all_subgroups(const PermGroup& g);

// Galois group of an irreducible f of degree 2..4, as explicit generators.
// Degree 4 uses the resolvent cubic plus a factor-pattern scan for C4 vs D4.
PermGroup galois_group_small(const IntPoly& f);

std::string render_cycle_type(const std::vector<int>& type); // "1,1,2"

} // namespace nf
