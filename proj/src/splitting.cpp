#include "nf/splitting.hpp"

#include <algorithm>

#include "nf/errors.hpp"
#include "nf/modp_factor.hpp"

namespace nf {

namespace {

// Monic lift with coefficients in [0, p).
IntPoly lift(const ModPoly& g) {
    std::vector<mpz_class> c(g.c.size());
    for (size_t i = 0; i < g.c.size(); i++) c[i] = mpz_class(g.c[i]);
    return IntPoly(std::move(c));
}

} // namespace

DedekindResult dedekind_index_test(const IntPoly& f, u64 p) {
    if (f.lc() != 1) throw usage_error("index test needs a monic polynomial");
    ModPoly fbar = ModPoly::reduce(f, p);
    // Squarefree mod p: radical = fbar, cofactor = 1, gcd trivially 1.
    if (gcd_monic(fbar, fbar.derivative()).degree() == 0)
        return DedekindResult::index_coprime;

    ModFactorization fac = factor(fbar, /*seed=*/0);
    ModPoly radical = ModPoly::one(p);
    for (auto& [g, e] : fac.factors) radical = mul(radical, g);
    ModPoly cofac = divmod(fbar, radical).first;

    IntPoly gh = lift(radical) * lift(cofac);
    IntPoly diff = gh - f;
    std::vector<mpz_class> fc(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); i++) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), diff.c[i].get_mpz_t(),
                    mpz_class(p).get_mpz_t());
        if (r != 0) throw usage_error("index test internal: lift mismatch");
        fc[i] = q;
    }
    ModPoly F = ModPoly::reduce(IntPoly(std::move(fc)), p);

    ModPoly g = gcd_monic(radical, cofac);
    ModPoly w = gcd_monic(F, g);
    return w.degree() == 0 ? DedekindResult::index_coprime
                           : DedekindResult::index_divisible;
}

SplittingType splitting_type(const NumberField& nf, u64 p, u64 seed) {
    if (!is_prime(p)) throw usage_error("splitting type needs a prime modulus");
    SplittingType st;
    st.p = p;
    if (dedekind_index_test(nf.spec.f, p) == DedekindResult::index_divisible) {
        st.exceptional = true;
        return st;
    }
    ModFactorization fac = factor(ModPoly::reduce(nf.spec.f, p), seed);
    for (auto& [g, e] : fac.factors) st.pairs.push_back({e, g.degree()});
    std::sort(st.pairs.begin(), st.pairs.end(),
              [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    return st;
}

Verdict3 has_degree_one(const NumberField& nf, u64 p, u64 seed) {
    SplittingType st = splitting_type(nf, p, seed);
    if (st.exceptional) return Verdict3::unknown;
    return st.has_f1() ? Verdict3::yes : Verdict3::no;
}

PrimeClass classify(const NumberField& nf, u64 p, u64 seed) {
    switch (has_degree_one(nf, p, seed)) {
        case Verdict3::yes: return PrimeClass::Low;
        case Verdict3::no: return PrimeClass::High;
        default: return PrimeClass::Exceptional;
    }
}

bool inertia_degree_monoid_member(const std::vector<int>& degrees, int e) {
    if (degrees.empty()) throw usage_error("monoid membership needs generators");
    if (e < 0) return false;
    std::vector<char> reach(e + 1, 0);
    reach[0] = 1;
    for (int v = 1; v <= e; v++)
        for (int g : degrees)
            if (g >= 1 && g <= v && reach[v - g]) { reach[v] = 1; break; }
    return reach[e];
}

const char* to_string(Verdict3 v) {
    switch (v) {
        case Verdict3::yes: return "yes";
        case Verdict3::no: return "no";
        default: return "unknown";
    }
}

const char* to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::Low: return "low";
        case PrimeClass::High: return "high";
        default: return "exceptional";
    }
}

} // namespace nf
