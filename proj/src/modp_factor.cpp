#include "nf/modp_factor.hpp"

#include <algorithm>
#include <random>

namespace nf {

ModPoly ModFactorization::product() const {
    ModPoly r(p, {unit});
    for (auto& [g, e] : factors)
        for (int i = 0; i < e; i++) r = mul(r, g);
    return r;
}

namespace {

// p-th root of f = g(x^p): in F_p the coefficients are Frobenius-fixed, so
// the root just decimates exponents.
ModPoly pth_root(const ModPoly& f) {
    std::vector<u64> c;
    for (size_t i = 0; i < f.c.size(); i += f.p) c.push_back(f.c[i]);
    return ModPoly(f.p, std::move(c));
}

bool is_pth_power_shape(const ModPoly& f) {
    for (size_t i = 0; i < f.c.size(); i++)
        if (f.c[i] != 0 && i % f.p != 0) return false;
    return true;
}

void sfd_rec(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out);

// Classical squarefree decomposition for monic f with f' != 0. Factors whose
// multiplicity is divisible by p survive into `cur`, a p-th power handled by
// the recursion's root-extraction branch.
void sfd_yun(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
    ModPoly cur = gcd_monic(f, f.derivative());
    ModPoly sq = divmod(f, cur).first; // product of all factors with p∤mult
    int i = 1;
    while (sq.degree() > 0) {
        ModPoly c = gcd_monic(sq, cur);
        ModPoly part = divmod(sq, c).first; // factors of exact multiplicity i
        if (part.degree() > 0) out.push_back({part, i * mult});
        sq = std::move(c);
        cur = divmod(cur, sq).first;
        i++;
    }
    if (cur.degree() > 0) sfd_rec(cur, mult, out); // p-th power leftover
}

void sfd_rec(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
    if (f.degree() <= 0) return;
    if (f.derivative().is_zero()) {
        if (!is_pth_power_shape(f)) throw error("squarefree_decompose: internal shape error");
        sfd_rec(pth_root(f), mult * (int)f.p, out);
        return;
    }
    sfd_yun(f, mult, out);
}

} // namespace

std::vector<std::pair<ModPoly, int>> squarefree_decompose(const ModPoly& f) {
    if (f.is_zero()) throw usage_error("squarefree_decompose: zero polynomial");
    std::vector<std::pair<ModPoly, int>> out;
    sfd_rec(f.make_monic(), 1, out);
    // merge duplicate multiplicities defensively, then order by multiplicity
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f0) {
    if (f0.is_zero()) throw usage_error("distinct_degree: zero polynomial");
    ModPoly f = f0.make_monic();
    if (f.degree() > 0) {
        ModPoly d = f.derivative();
        if (d.is_zero() || gcd_monic(f, d).degree() != 0)
            throw usage_error("distinct_degree: input not squarefree");
    }
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly h = ModPoly::x(f.p); // x^{p^k} mod f, raised incrementally
    int k = 0;
    while (f.degree() > 0 && 2 * (k + 1) <= f.degree()) {
        k++;
        h = powmod_poly(h, mpz_class((unsigned long)f.p), f);
        ModPoly g = gcd_monic(sub(h, ModPoly::x(f.p)), f);
        if (g.degree() > 0) {
            out.push_back({g, k});
            f = divmod(f, g).first;
            h = mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back({f, f.degree()});
    return out;
}

namespace {

u64 splitmix(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

u64 poly_hash(const ModPoly& f) {
    u64 h = splitmix(f.p);
    for (u64 c : f.c) h = splitmix(h ^ c);
    return h;
}

// Equal-degree splitting of squarefree monic f whose irreducible factors all
// have degree k. Cantor-Zassenhaus; trace maps in characteristic 2.
void edf(const ModPoly& f, int k, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    int n = f.degree();
    if (n == k) { out.push_back(f); return; }
    u64 p = f.p;
    while (true) {
        std::vector<u64> rc(n);
        for (int i = 0; i < n; i++) rc[i] = rng() % p;
        ModPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        ModPoly g = gcd_monic(a, f);
        if (g.degree() == 0) {
            if (p == 2) {
                ModPoly t(p, {}); // trace map a + a^2 + ... + a^{2^{k-1}}
                ModPoly cur = mod(a, f);
                for (int i = 0; i < k; i++) {
                    t = add(t, cur);
                    cur = mulmod_poly(cur, cur, f);
                }
                g = gcd_monic(t, f);
            } else {
                mpz_class e;
                mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)k);
                e = (e - 1) / 2;
                ModPoly b = powmod_poly(a, e, f);
                g = gcd_monic(sub(b, ModPoly::one(p)), f);
            }
        }
        if (g.degree() > 0 && g.degree() < n) {
            edf(g, k, rng, out);
            edf(divmod(f, g).first.make_monic(), k, rng, out);
            return;
        }
    }
}

} // namespace

ModFactorization factor(const ModPoly& f, u64 seed) {
    if (f.is_zero()) throw usage_error("factor: zero polynomial");
    ModFactorization r;
    r.p = f.p;
    r.unit = f.lc();
    if (f.degree() == 0) return r;
    std::mt19937_64 rng(splitmix(seed) ^ poly_hash(f));
    for (auto& [part, mult] : squarefree_decompose(f)) {
        for (auto& [prod, k] : distinct_degree(part)) {
            std::vector<ModPoly> irr;
            edf(prod, k, rng, irr);
            for (auto& g : irr) r.factors.push_back({g, mult});
        }
    }
    std::sort(r.factors.begin(), r.factors.end(), [](auto& a, auto& b) {
        if (!(a.first == b.first)) return canonical_less(a.first, b.first);
        return a.second < b.second;
    });
    return r;
}

std::optional<std::vector<int>> cycle_type_mod_p(const IntPoly& f, u64 p) {
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() != f.degree()) return std::nullopt; // leading coeff vanished
    fp = fp.make_monic();
    ModPoly d = fp.derivative();
    if (d.is_zero() || gcd_monic(fp, d).degree() != 0) return std::nullopt;
    std::vector<int> type;
    for (auto& [prod, k] : distinct_degree(fp)) {
        int count = prod.degree() / k;
        for (int i = 0; i < count; i++) type.push_back(k);
    }
    std::sort(type.begin(), type.end());
    return type;
}

} // namespace nf
