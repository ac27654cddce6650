#include "nf/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nf/modp_factor.hpp"

namespace nf {

Perm perm_identity(int d) {
    Perm p(d);
    for (int i = 0; i < d; i++) p[i] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[a[i]] = (int)i;
    return r;
}

std::vector<int> cycle_type(const Perm& a) {
    std::vector<int> type;
    std::vector<bool> seen(a.size(), false);
    for (size_t i = 0; i < a.size(); i++) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = a[j];
            len++;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

bool PermGroup::contains(const Perm& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

PermGroup close(int degree, const std::vector<Perm>& generators) {
    const size_t kGuard = 1000000;
    for (auto& g : generators) {
        if ((int)g.size() != degree) throw usage_error("close: generator degree mismatch");
        std::vector<bool> hit(degree, false);
        for (int x : g) {
            if (x < 0 || x >= degree || hit[x]) throw usage_error("close: not a permutation");
            hit[x] = true;
        }
    }
    std::set<Perm> elems;
    std::vector<Perm> frontier;
    Perm id = perm_identity(degree);
    elems.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto& e : frontier)
            for (auto& g : generators) {
                Perm h = perm_compose(g, e);
                if (elems.insert(h).second) {
                    if (elems.size() > kGuard) throw guard_error("close: closure exceeds limit");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    PermGroup r;
    r.degree = degree;
    r.generators = generators;
    r.elements.assign(elems.begin(), elems.end());
    return r;
}

bool is_transitive(const PermGroup& g) {
    if (g.degree == 0) return false;
    std::vector<bool> orbit(g.degree, false);
    orbit[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < g.degree; i++)
            if (orbit[i])
                for (auto& e : g.generators)
                    if (!orbit[e[i]]) { orbit[e[i]] = true; grew = true; }
    }
    for (bool b : orbit)
        if (!b) return false;
    return true;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
    std::set<Perm> remaining(g.elements.begin(), g.elements.end());
    std::vector<ConjClass> out;
    while (!remaining.empty()) {
        Perm seed = *remaining.begin();
        std::set<Perm> cls;
        std::vector<Perm> frontier{seed};
        cls.insert(seed);
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (auto& e : frontier)
                for (auto& h : g.elements) {
                    Perm c = perm_compose(perm_compose(h, e), perm_inverse(h));
                    if (cls.insert(c).second) next.push_back(std::move(c));
                }
            frontier = std::move(next);
        }
        ConjClass cc;
        cc.rep = *cls.begin();
        cc.members.assign(cls.begin(), cls.end());
        cc.type = cycle_type(cc.rep);
        for (auto& m : cc.members) remaining.erase(m);
        out.push_back(std::move(cc));
    }
    std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.type != b.type) return a.type < b.type;
        return a.rep < b.rep;
    });
    return out;
}

PermGroup point_stabilizer(const PermGroup& g, int point) {
    PermGroup h;
    h.degree = g.degree;
    for (auto& e : g.elements)
        if (e[point] == point) h.elements.push_back(e);
    h.generators = h.elements; // explicit element list doubles as generators
    return h;
}

bool is_subgroup_of(const PermGroup& h, const PermGroup& g) {
    for (auto& e : h.elements)
        if (!g.contains(e)) return false;
    return true;
}

std::vector<ConjClass> classes_missing_subgroup(const PermGroup& g, const PermGroup& h) {
    std::vector<ConjClass> out;
    for (auto& cls : conjugacy_classes(g)) {
        bool meets = false;
        for (auto& m : cls.members)
            if (std::binary_search(h.elements.begin(), h.elements.end(), m)) {
                meets = true;
                break;
            }
        if (!meets) out.push_back(cls);
    }
    return out;
}

ConjClass missing_class_witness(const PermGroup& g, const PermGroup& h) {
    if (h.order() >= g.order()) throw usage_error("missing_class_witness: H must be proper");
    auto missing = classes_missing_subgroup(g, h);
    if (missing.empty()) throw error("missing_class_witness: no missing class (unexpected)");
    return missing.front();
}

TheoreticalDensities theoretical_densities(const PermGroup& g, const PermGroup& h) {
    TheoreticalDensities r;
    r.d_low = 0;
    r.d_high = 0;
    mpz_class order((unsigned long)g.order());
    for (auto& cls : conjugacy_classes(g)) {
        mpq_class dens(mpz_class((unsigned long)cls.members.size()), order);
        dens.canonicalize();
        r.per_class.push_back({cls.type, dens});
        r.by_type[cls.type] += dens;
        bool meets = false;
        for (auto& m : cls.members)
            if (std::binary_search(h.elements.begin(), h.elements.end(), m)) {
                meets = true;
                break;
            }
        if (meets) {
            r.d_low += dens;
            r.type_meets_h[cls.type] = true;
        } else {
            r.d_high += dens;
            if (!r.type_meets_h.count(cls.type)) r.type_meets_h[cls.type] = false;
        }
    }
    for (auto& [t, q] : r.by_type) q.canonicalize();
    r.d_low.canonicalize();
    r.d_high.canonicalize();
    return r;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
    // Subgroups of the groups used here (|G| <= 24) are all 2-generated, but
    // closing over triples too costs little and needs no such theorem.
    std::set<std::vector<Perm>> seen;
    std::vector<PermGroup> out;
    auto consider = [&](const std::vector<Perm>& gens) {
        PermGroup h = close(g.degree, gens);
        if (seen.insert(h.elements).second) out.push_back(std::move(h));
    };
    consider({});
    size_t n = g.elements.size();
    for (size_t i = 0; i < n; i++) {
        consider({g.elements[i]});
        for (size_t j = i + 1; j < n; j++) {
            consider({g.elements[i], g.elements[j]});
            if (n <= 24)
                for (size_t k = j + 1; k < n; k++)
                    consider({g.elements[i], g.elements[j], g.elements[k]});
        }
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

namespace {

PermGroup from_gens(int d, std::vector<Perm> gens) { return close(d, std::move(gens)); }

bool mpz_is_square(const mpz_class& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t());
}

// Distinct integer roots of a monic cubic with integer coefficients.
std::vector<mpz_class> integer_roots_monic_cubic(const IntPoly& r) {
    std::vector<mpz_class> roots;
    mpz_class c0 = r.coeff(0);
    auto try_root = [&](const mpz_class& t) {
        if (r.eval(t) == 0 &&
            std::find(roots.begin(), roots.end(), t) == roots.end())
            roots.push_back(t);
    };
    if (c0 == 0) {
        try_root(0);
        // factor out x and solve the quadratic x^2 + ax + b
        mpz_class a = r.coeff(2), b = r.coeff(1);
        mpz_class disc = a * a - 4 * b;
        if (mpz_is_square(disc)) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            if ((-a + s) % 2 == 0) try_root((-a + s) / 2);
            if ((-a - s) % 2 == 0) try_root((-a - s) / 2);
        }
        return roots;
    }
    mpz_class a0 = abs(c0);
    if (!a0.fits_ulong_p()) throw guard_error("galois_group_small: resolvent constant too large");
    Factorization f = factorize(a0.get_ui());
    std::vector<u64> divs{1};
    for (auto& [p, e] : f.factors) {
        size_t base = divs.size();
        u64 pk = 1;
        for (int i = 0; i < e; i++) {
            pk *= p;
            for (size_t j = 0; j < base; j++) divs.push_back(divs[j] * pk);
        }
    }
    for (u64 d : divs) {
        try_root(mpz_class((unsigned long)d));
        try_root(mpz_class(-(long)d));
    }
    return roots;
}

} // namespace

PermGroup galois_group_small(const IntPoly& f) {
    int d = f.degree();
    if (d == 2) return from_gens(2, {{1, 0}});
    mpz_class disc = discriminant(f);
    if (d == 3) {
        if (mpz_is_square(disc)) return from_gens(3, {{1, 2, 0}}); // A3
        return from_gens(3, {{1, 0, 2}, {1, 2, 0}}); // S3
    }
    if (d != 4) throw usage_error("galois_group_small: degree must be 2..4");

    // x^4 + a x^3 + b x^2 + c x + e -> resolvent y^3 - b y^2 + (ac - 4e) y
    //                                  - (a^2 e - 4 b e + c^2)
    mpz_class a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), e = f.coeff(0);
    IntPoly resolvent({-(a * a * e - 4 * b * e + c * c), a * c - 4 * e, -b, mpz_class(1)});
    size_t nroots = integer_roots_monic_cubic(resolvent).size();

    if (nroots == 0) {
        if (mpz_is_square(disc)) return from_gens(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); // A4
        return from_gens(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); // S4
    }
    if (nroots >= 3) return from_gens(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}); // V4

    // One rational root: C4 or D4. A (1,1,2) factor-degree pattern at any
    // unramified prime certifies D4 (C4 elements only have types 1111/22/4);
    // none across p <= 10^4 leaves C4, with vanishing error probability.
    for (u64 p : primes_upto(10000)) {
        if (mpz_class(disc % mpz_class((unsigned long)p)) == 0) continue;
        auto type = cycle_type_mod_p(f, p);
        if (type && *type == std::vector<int>{1, 1, 2})
            return from_gens(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}); // D4
    }
    return from_gens(4, {{1, 2, 3, 0}}); // C4
}

std::string render_cycle_type(const std::vector<int>& type) {
    std::ostringstream os;
    for (size_t i = 0; i < type.size(); i++) {
        if (i) os << ",";
        os << type[i];
    }
    return os.str();
}

} // namespace nf
