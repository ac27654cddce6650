#include "nf/quadratic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

#include "nf/errors.hpp"

namespace nf {

namespace {

i64 to_i64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw guard_error("quadratic form coefficient overflow");
    return (i64)v;
}

i128 fdiv(i128 x, i128 y) { // floor division, y > 0
    i128 q = x / y;
    if (x % y != 0 && x < 0) q--;
    return q;
}

struct Egcd {
    i128 g, x, y; // g = x*a + y*b, g >= 0
};

Egcd egcd(i128 a, i128 b) {
    i128 old_r = a, r = b;
    i128 old_s = 1, s = 0;
    i128 old_t = 0, t = 1;
    while (r != 0) {
        i128 q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

i128 disc128(const QuadForm& f) {
    return i128(f.b) * f.b - i128(4) * f.a * f.c;
}

} // namespace

i64 QuadForm::disc() const { return to_i64(disc128(*this)); }

bool is_discriminant(i64 D) {
    i64 r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) return false;
    if (D >= 0 && is_square_u64((u64)D)) return false;
    return true;
}

bool is_fundamental_discriminant(i64 D) {
    if (!is_discriminant(D)) return false;
    auto squarefree = [](i64 m) {
        u64 a = (u64)(m < 0 ? -m : m);
        if (a == 0) return false;
        for (auto& [p, e] : factorize(a).factors)
            if (e >= 2) return false;
        return true;
    };
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    i64 m = D / 4;
    i64 rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

QuadForm principal_form(i64 D) {
    if (!is_discriminant(D)) throw usage_error("not a discriminant");
    i64 b0 = (((D % 2) + 2) % 2);
    i64 c0 = to_i64((i128(b0) * b0 - D) / 4);
    return {1, b0, c0};
}

QuadForm reduce_definite(QuadForm f) {
    i128 a = f.a, b = f.b, c = f.c;
    i128 D = disc128(f);
    if (D >= 0 || a <= 0) throw usage_error("positive definite form required");
    for (int iter = 0; iter < 20000; iter++) {
        if (b > a || b <= -a) {
            i128 q = fdiv(b + a, 2 * a);
            b -= 2 * a * q;
            if (b == -a) b = a;
            c = (b * b - D) / (4 * a);
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    if (b < 0 && (a == c || b == -a)) b = -b;
    return {to_i64(a), to_i64(b), to_i64(c)};
}

bool is_reduced_indefinite(const QuadForm& f) {
    i128 D = disc128(f);
    if (D <= 0) return false;
    i64 s = (i64)isqrt_u64((u64)to_i64(D));
    i64 aa = f.a < 0 ? -f.a : f.a;
    return f.b > 0 && f.b <= s && 2 * aa - f.b <= s && 2 * aa + f.b > s;
}

QuadForm rho(const QuadForm& f) {
    i128 D = disc128(f);
    if (D <= 0 || f.c == 0) throw usage_error("rho needs an indefinite form with c != 0");
    i64 s = (i64)isqrt_u64((u64)to_i64(D));
    i128 c = f.c;
    i128 ac = c < 0 ? -c : c;
    i128 U = ac > s ? ac : i128(s);
    i128 m = 2 * ac;
    i128 k = fdiv(U + f.b, m);
    i128 b2 = m * k - f.b;
    i128 c2 = (b2 * b2 - D) / (4 * c);
    return {to_i64(c), to_i64(b2), to_i64(c2)};
}

QuadForm reduce_any(QuadForm f) {
    i128 D = disc128(f);
    if (D < 0) {
        if (f.a < 0) throw usage_error("negative definite form");
        return reduce_definite(f);
    }
    if (!is_discriminant(to_i64(D))) throw usage_error("square discriminant");
    for (int iter = 0; iter < 200000; iter++) {
        if (is_reduced_indefinite(f)) return f;
        f = rho(f);
    }
    throw guard_error("indefinite reduction did not terminate");
}

std::vector<QuadForm> cycle_of(const QuadForm& reduced) {
    if (!is_reduced_indefinite(reduced)) throw usage_error("cycle needs a reduced indefinite form");
    std::vector<QuadForm> cyc{reduced};
    QuadForm g = rho(reduced);
    while (!(g == reduced)) {
        cyc.push_back(g);
        if (cyc.size() > 1000000) throw guard_error("cycle overflow");
        g = rho(g);
    }
    return cyc;
}

QuadForm class_rep(const QuadForm& f) {
    QuadForm r = reduce_any(f);
    if (disc128(f) < 0) return r;
    std::vector<QuadForm> cyc = cycle_of(r);
    return *std::min_element(cyc.begin(), cyc.end());
}

namespace {

// Least cycle member with a > 0; reduced indefinite cycles alternate the
// sign of a, so one exists.
QuadForm pos_rep(const QuadForm& f) {
    if (disc128(f) < 0) return reduce_definite(f);
    std::vector<QuadForm> cyc = cycle_of(reduce_any(f));
    QuadForm best{0, 0, 0};
    bool found = false;
    for (const QuadForm& g : cyc)
        if (g.a > 0 && (!found || g < best)) { best = g; found = true; }
    if (!found) throw guard_error("no positive leading coefficient in cycle");
    return best;
}

} // namespace

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
    i128 D = disc128(f1);
    if (D != disc128(f2)) throw usage_error("composition needs equal discriminants");
    QuadForm g1 = pos_rep(f1), g2 = pos_rep(f2);
    i128 a1 = g1.a, b1 = g1.b, a2 = g2.a, b2 = g2.b;
    i128 sm = (b1 + b2) / 2;
    Egcd e0 = egcd(a1, a2);
    Egcd e1 = egcd(e0.g, sm);
    i128 g = e1.g;
    i128 X1 = e1.x * e0.x, X2 = e1.x * e0.y, X3 = e1.y;
    i128 a3 = (a1 / g) * (a2 / g);
    i128 mu = X1 * a1 * b2 + X2 * a2 * b1 + X3 * ((b1 * b2 + D) / 2);
    if (mu % g != 0) throw usage_error("composition internal: inexact division");
    i128 b3 = mu / g;
    b3 -= 2 * a3 * fdiv(b3 + a3, 2 * a3);
    if (b3 == -a3) b3 = a3;
    i128 num = b3 * b3 - D;
    if (num % (4 * a3) != 0) throw usage_error("composition internal: bad c");
    i128 c3 = num / (4 * a3);
    return class_rep({to_i64(a3), to_i64(b3), to_i64(c3)});
}

QuadForm inverse_form(const QuadForm& f) { return class_rep({f.a, -f.b, f.c}); }

namespace {

std::map<i64, std::unique_ptr<ClassGroupQ>>& cg_cache() {
    static std::map<i64, std::unique_ptr<ClassGroupQ>> cache;
    return cache;
}
std::mutex cg_mutex;

ClassGroupQ build_class_group(i64 D) {
    ClassGroupQ cg;
    cg.D = D;
    std::set<QuadForm> reps;
    if (D < 0) {
        for (i64 b = (D % 2 == 0 ? 0 : 1); 3 * b * b <= -D; b += 2) {
            i64 n = to_i64((i128(b) * b - D) / 4); // = a*c
            for (i64 a = b > 0 ? b : 1; (i128)a * a <= n; a++) {
                if (n % a != 0) continue;
                i64 c = n / a;
                reps.insert({a, b, c});
                if (b != 0 && b < a && a < c) reps.insert({a, -b, c});
            }
        }
    } else {
        i64 s = (i64)isqrt_u64((u64)D);
        std::set<QuadForm> all;
        for (i64 b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
            i64 n = to_i64((i128(D) - i128(b) * b) / 4); // = |a*c|
            for (i64 a = 1; (i128)a * a <= n; a++) {
                if (n % a != 0) continue;
                for (i64 aa : {a, n / a}) {
                    if (2 * aa - b <= s && 2 * aa + b > s) {
                        all.insert({aa, b, -(n / aa)});
                        all.insert({-aa, b, n / aa});
                    }
                    if (a == n / a) break;
                }
            }
        }
        while (!all.empty()) {
            QuadForm f = *all.begin();
            std::vector<QuadForm> cyc = cycle_of(f);
            QuadForm least = *std::min_element(cyc.begin(), cyc.end());
            for (const QuadForm& g : cyc) all.erase(g);
            reps.insert(least);
        }
    }
    cg.reps.assign(reps.begin(), reps.end());
    cg.h_narrow = (long long)cg.reps.size();
    cg.principal = class_rep(principal_form(D));
    if (D < 0) {
        cg.s_principal = false;
        cg.s_rep = cg.principal;
        cg.h = cg.h_narrow;
    } else {
        QuadForm p0 = principal_form(D);
        cg.s_rep = class_rep({-p0.a, p0.b, -p0.c});
        cg.s_principal = cg.s_rep == cg.principal;
        if (!cg.s_principal && cg.h_narrow % 2 != 0)
            throw guard_error("class group internal: odd narrow order without norm -1");
        cg.h = cg.s_principal ? cg.h_narrow : cg.h_narrow / 2;
    }
    return cg;
}

} // namespace

const ClassGroupQ& class_group(i64 D) {
    if (!is_discriminant(D)) throw usage_error("not a discriminant");
    if (!is_fundamental_discriminant(D)) throw usage_error("fundamental discriminant required");
    if (D > 100000000 || D < -100000000) throw guard_error("|D| exceeds the enumeration bound");
    std::lock_guard<std::mutex> lk(cg_mutex);
    auto& cache = cg_cache();
    auto it = cache.find(D);
    if (it == cache.end())
        it = cache.emplace(D, std::make_unique<ClassGroupQ>(build_class_group(D))).first;
    return *it->second;
}

long long class_number(i64 D) { return class_group(D).h; }

PellData pell_solve(u64 a) {
    if (a == 0 || is_square_u64(a)) throw usage_error("radicand must be a positive nonsquare");
    PellData pd;
    pd.a = a;
    u64 a0 = isqrt_u64(a);
    u64 m = 0, d = 1, ai = a0;
    mpz_class pm1 = 1, p = a0, qm1 = 0, q = 1;
    while (true) {
        m = d * ai - m;
        d = (a - m * m) / d;
        ai = (a0 + m) / d;
        pd.period++;
        if (d == 1) break;
        mpz_class pn = mpz_class(ai) * p + pm1;
        mpz_class qn = mpz_class(ai) * q + qm1;
        pm1 = p; p = pn;
        qm1 = q; q = qn;
        if (pd.period > 10000000) throw guard_error("continued fraction period overflow");
    }
    pd.x0 = p;
    pd.y0 = q;
    pd.norm_sign = pd.period % 2 == 0 ? 1 : -1;
    return pd;
}

int kronecker_at_prime(i64 D, u64 p) {
    if (p == 2) {
        if (D % 2 == 0) return 0;
        i64 r = ((D % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return jacobi(D, p);
}

namespace {

// A form (p, b, *) of discriminant D with leading coefficient the split or
// ramified prime p.
QuadForm prime_form(i64 D, u64 p) {
    int k = kronecker_at_prime(D, p);
    i64 b;
    if (k == 0) {
        if (p == 2) {
            i64 r = ((D % 8) + 8) % 8;
            b = (r == 4) ? 2 : 0;
        } else {
            b = (D % 2 == 0) ? 0 : (i64)p;
        }
    } else {
        u64 rm = (u64)(((D % (i64)p) + (i64)p) % (i64)p);
        if (p == 2) {
            b = 1;
        } else {
            std::optional<u64> r = sqrt_mod(rm, p);
            if (!r) throw usage_error("prime form internal: missing square root");
            i64 want = ((D % 2) + 2) % 2;
            b = ((i64)*r % 2 == want) ? (i64)*r : (i64)(*r + p);
        }
    }
    i128 num = i128(b) * b - D;
    i128 den = i128(4) * p;
    if (num % den != 0) throw usage_error("prime form internal: inexact c");
    return {(i64)p, b, to_i64(num / den)};
}

} // namespace

PrimeRep represents_prime_principal(i64 D, u64 p) {
    if (!is_prime(p)) throw usage_error("p must be prime");
    const ClassGroupQ& cg = class_group(D);
    if (kronecker_at_prime(D, p) == -1) return {false, 0};
    QuadForm rep = class_rep(prime_form(D, p));
    if (D < 0) {
        return rep == cg.principal ? PrimeRep{true, 1} : PrimeRep{false, 0};
    }
    if (cg.s_principal)
        return rep == cg.principal ? PrimeRep{true, 0} : PrimeRep{false, 0};
    if (rep == cg.principal) return {true, 1};
    if (rep == cg.s_rep) return {true, -1};
    return {false, 0};
}

bool represents_integer_principal(i64 D, u64 n) {
    if (n < 1) throw usage_error("n must be positive");
    const ClassGroupQ& cg = class_group(D);
    if (n == 1) return true;
    std::set<QuadForm> cur{cg.principal};
    for (auto& [p, e] : factorize(n).factors) {
        int k = kronecker_at_prime(D, (u64)p);
        std::set<QuadForm> avail;
        if (k == -1) {
            if (e % 2 != 0) return false;
            continue; // contributes the identity only
        }
        QuadForm t = class_rep(prime_form(D, (u64)p));
        if (k == 0) {
            if (e % 2 == 0) continue;
            avail.insert(t);
        } else {
            // t^{2j-e} for j = 0..e
            QuadForm tinv = inverse_form(t);
            QuadForm acc = cg.principal;
            for (int i = 0; i < e; i++) acc = compose(acc, tinv);
            avail.insert(acc);
            QuadForm t2 = compose(t, t);
            for (int j = 1; j <= e; j++) {
                acc = compose(acc, t2);
                avail.insert(acc);
            }
        }
        std::set<QuadForm> next;
        for (const QuadForm& s : cur)
            for (const QuadForm& a : avail) next.insert(compose(s, a));
        cur = std::move(next);
    }
    if (cur.count(cg.principal)) return true;
    if (D > 0 && cur.count(cg.s_rep)) return true;
    return false;
}

} // namespace nf
