#include "nf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace nf {

// ---------- IntPoly ----------

IntPoly IntPoly::from(const std::vector<long long>& v) {
    std::vector<mpz_class> c;
    c.reserve(v.size());
    for (long long x : v) c.push_back(mpz_class((long)x));
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (int i = (int)c.size() - 1; i >= 0; i--) r = r * x + c[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> d;
    for (size_t i = 1; i < c.size(); i++) d.push_back(c[i] * (long)i);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) c[i] += b.c[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) c[i] -= b.c[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++)
        for (size_t j = 0; j < b.c.size(); j++) c[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(c));
}

std::string IntPoly::render(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c.size() - 1; i >= 0; i--) {
        if (c[i] == 0) continue;
        mpz_class a = c[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------- ModPoly ----------

ModPoly ModPoly::reduce(const IntPoly& f, u64 p) {
    std::vector<u64> c(f.c.size());
    mpz_class m(mpz_class((unsigned long)p));
    for (size_t i = 0; i < f.c.size(); i++) {
        mpz_class r = f.c[i] % m;
        if (r < 0) r += m;
        c[i] = r.get_ui();
    }
    return ModPoly(p, std::move(c));
}

void ModPoly::trim() {
    for (auto& x : c) x %= p;
    while (!c.empty() && c.back() == 0) c.pop_back();
}

u64 ModPoly::eval(u64 x) const {
    u64 r = 0;
    x %= p;
    for (int i = (int)c.size() - 1; i >= 0; i--) r = (mulmod(r, x, p) + c[i]) % p;
    return r;
}

ModPoly ModPoly::make_monic() const {
    if (is_zero() || lc() == 1) return *this;
    u64 inv = powmod(lc(), p - 2, p);
    ModPoly r = *this;
    for (auto& x : r.c) x = mulmod(x, inv, p);
    return r;
}

ModPoly ModPoly::derivative() const {
    std::vector<u64> d;
    for (size_t i = 1; i < c.size(); i++) d.push_back(mulmod(c[i], i % p, p));
    return ModPoly(p, std::move(d));
}

std::string ModPoly::render(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c.size() - 1; i >= 0; i--) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i > 0 && c[i] != 1) os << "*";
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

ModPoly add(const ModPoly& a, const ModPoly& b) {
    std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) c[i] = (c[i] + b.c[i]) % a.p;
    return ModPoly(a.p, std::move(c));
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
    std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) c[i] = (c[i] + a.p - b.c[i] % a.p) % a.p;
    return ModPoly(a.p, std::move(c));
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p, {});
    std::vector<u64> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            c[i + j] = (c[i + j] + (u128)a.c[i] * b.c[j]) % a.p;
    }
    return ModPoly(a.p, std::move(c));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw usage_error("divmod: division by zero polynomial");
    u64 p = b.p;
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
    std::vector<u64> r = a.c;
    std::vector<u64> q(a.degree() - b.degree() + 1, 0);
    u64 inv = powmod(b.lc(), p - 2, p);
    for (int i = a.degree(); i >= b.degree(); i--) {
        u64 coef = mulmod(r[i], inv, p);
        if (coef == 0) continue;
        q[i - b.degree()] = coef;
        for (int j = 0; j <= b.degree(); j++) {
            u64 s = mulmod(coef, b.c[j], p);
            u64& dst = r[i - b.degree() + j];
            dst = (dst + p - s) % p;
        }
    }
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly mod(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd_monic(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.make_monic();
}

ModPoly mulmod_poly(const ModPoly& a, const ModPoly& b, const ModPoly& m) {
    return mod(mul(a, b), m);
}

ModPoly powmod_poly(ModPoly base, const mpz_class& e, const ModPoly& m) {
    ModPoly r = ModPoly::one(m.p);
    base = mod(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mulmod_poly(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod_poly(r, base, m);
    }
    return r;
}

bool canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
}

// ---------- MultiPoly ----------

bool DegRevLexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    for (int i = (int)a.size() - 1; i >= 0; i--)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly MultiPoly::constant(int nv, const mpz_class& v) {
    MultiPoly r(nv);
    if (v != 0) r.t[std::vector<int>(nv, 0)] = v;
    return r;
}

MultiPoly MultiPoly::var(int nv, int i) {
    MultiPoly r(nv);
    std::vector<int> e(nv, 0);
    e[i] = 1;
    r.t[e] = 1;
    return r;
}

void MultiPoly::add_term(const std::vector<int>& e, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
        t.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) t.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (t.empty()) return -1;
    long d = 0;
    for (int x : t.begin()->first) d += x; // leading term has maximal degree
    return (int)d;
}

bool MultiPoly::is_homogeneous(int d) const {
    for (auto& [e, c] : t) {
        long s = 0;
        for (int x : e) s += x;
        if (s != d) return false;
    }
    return true;
}

mpz_class MultiPoly::eval(const std::vector<mpz_class>& x) const {
    mpz_class r = 0;
    for (auto& [e, c] : t) {
        mpz_class term = c;
        for (int i = 0; i < nvars; i++)
            for (int k = 0; k < e[i]; k++) term *= x[i];
        r += term;
    }
    return r;
}

mpz_class MultiPoly::coeff(const std::vector<int>& e) const {
    auto it = t.find(e);
    return it == t.end() ? mpz_class(0) : it->second;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [e, c] : b.t) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [e, c] : b.t) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars);
    std::vector<int> e(a.nvars);
    for (auto& [ea, ca] : a.t)
        for (auto& [eb, cb] : b.t) {
            for (int i = 0; i < a.nvars; i++) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::string MultiPoly::render() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant_term = true;
        for (int x : e)
            if (x) constant_term = false;
        std::ostringstream mono;
        bool firstv = true;
        for (int i = 0; i < nvars; i++) {
            if (!e[i]) continue;
            if (!firstv) mono << "*";
            firstv = false;
            mono << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (constant_term) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

namespace {

// Exact division A / B assuming B divides A (Bareiss guarantee).
MultiPoly divide_exact(MultiPoly a, const MultiPoly& b) {
    if (b.is_zero()) throw usage_error("divide_exact: division by zero");
    MultiPoly q(a.nvars);
    const auto& ltb = *b.t.begin();
    std::vector<int> e(a.nvars);
    while (!a.is_zero()) {
        const auto& lta = *a.t.begin();
        for (int i = 0; i < a.nvars; i++) {
            e[i] = lta.first[i] - ltb.first[i];
            if (e[i] < 0) throw error("divide_exact: non-divisible leading monomial");
        }
        mpz_class qc;
        mpz_class rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), lta.second.get_mpz_t(), ltb.second.get_mpz_t());
        if (rem != 0) throw error("divide_exact: non-divisible leading coefficient");
        MultiPoly term(a.nvars);
        term.t[e] = qc;
        q.add_term(e, qc);
        a = a - term * b;
    }
    return q;
}

} // namespace

MultiPoly det_linear_forms(const std::vector<std::vector<MultiPoly>>& m0) {
    size_t n = m0.size();
    for (auto& row : m0)
        if (row.size() != n) throw usage_error("det_linear_forms: non-square matrix");
    if (n == 0) throw usage_error("det_linear_forms: empty matrix");
    int nv = m0[0][0].nvars;
    std::vector<std::vector<MultiPoly>> m = m0;

    // Fraction-free Bareiss with row pivoting; sign tracked on swaps.
    MultiPoly prev = MultiPoly::constant(nv, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m[k][k].is_zero()) {
            size_t s = k + 1;
            while (s < n && m[s][k].is_zero()) s++;
            if (s == n) return MultiPoly(nv); // singular
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(std::move(num), prev);
            }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    if (sign < 0) det = MultiPoly(nv) - det;
    return det;
}

mpz_class det_int(std::vector<std::vector<mpz_class>> m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw usage_error("det_int: non-square matrix");
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && m[s][k] == 0) s++;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    int n = f.degree(), m = g.degree();
    if (n < 0 || m < 0) return 0;
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.c[0].get_mpz_t(), m);
        return r;
    }
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.c[0].get_mpz_t(), n);
        return r;
    }
    size_t size = n + m;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    for (int i = 0; i < m; i++)
        for (int j = 0; j <= n; j++) s[i][i + j] = f.c[n - j];
    for (int i = 0; i < n; i++)
        for (int j = 0; j <= m; j++) s[m + i][i + j] = g.c[m - j];
    return det_int(std::move(s));
}

mpz_class discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw usage_error("discriminant: constant polynomial");
    mpz_class res = resultant(f, f.derivative());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    long e = (long)d * (d - 1) / 2;
    return (e % 2) ? mpz_class(-q) : q;
}

} // namespace nf
