#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "nf/arith.hpp"
#include "nf/errors.hpp"

namespace nf {

// ---------- univariate over Z ----------

struct IntPoly {
    std::vector<mpz_class> c; // c[i] is the coefficient of x^i; no trailing zeros

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly from(const std::vector<long long>& v);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    const mpz_class& lc() const { return c.back(); }
    mpz_class coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : mpz_class(0); }
    mpz_class eval(const mpz_class& x) const;
    IntPoly derivative() const;
    std::string render(const std::string& var = "x") const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
};

// ---------- univariate over F_p ----------

struct ModPoly {
    u64 p = 0;
    std::vector<u64> c; // reduced to [0, p); no trailing zeros

    ModPoly() = default;
    ModPoly(u64 mod, std::vector<u64> coeffs) : p(mod), c(std::move(coeffs)) { trim(); }
    static ModPoly reduce(const IntPoly& f, u64 p);
    static ModPoly x(u64 p) { return ModPoly(p, {0, 1}); }
    static ModPoly one(u64 p) { return ModPoly(p, {1}); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    u64 lc() const { return c.back(); }
    u64 eval(u64 x) const;
    ModPoly make_monic() const;
    ModPoly derivative() const;
    std::string render(const std::string& var = "x") const;

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p == b.p && a.c == b.c; }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }
};

ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
// Throws usage_error on division by the zero polynomial.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly mod(const ModPoly& a, const ModPoly& b);
ModPoly gcd_monic(ModPoly a, ModPoly b);
ModPoly mulmod_poly(const ModPoly& a, const ModPoly& b, const ModPoly& m);
ModPoly powmod_poly(ModPoly base, const mpz_class& e, const ModPoly& m);
// Canonical total order: by degree, then coefficients c0..cd lexicographically.
bool canonical_less(const ModPoly& a, const ModPoly& b);

// ---------- sparse multivariate over Z ----------

// Descending degrevlex: higher total degree first; ties broken so that the
// monomial whose exponent vector has the smaller entry at the last differing
// position (scanning from the last variable) comes first.
struct DegRevLexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, mpz_class, DegRevLexDesc> t; // no zero coefficients

    MultiPoly() = default;
    explicit MultiPoly(int nv) : nvars(nv) {}
    static MultiPoly constant(int nv, const mpz_class& v);
    static MultiPoly var(int nv, int i); // x_{i+1}, 0-indexed i

    bool is_zero() const { return t.empty(); }
    void add_term(const std::vector<int>& e, const mpz_class& coeff);
    int total_degree() const; // -1 for zero
    bool is_homogeneous(int d) const;
    mpz_class eval(const std::vector<mpz_class>& x) const;
    mpz_class coeff(const std::vector<int>& e) const;
    std::string render() const; // canonical degrevlex text, e.g. "x1^2 + x2^2"

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars == b.nvars && a.t == b.t;
    }
};

// Exact determinant of a matrix of polynomials via fraction-free Bareiss.
// Entries of degree <= 1 is the intended use; any degrees work.
// Throws usage_error on a non-square matrix.
MultiPoly det_linear_forms(const std::vector<std::vector<MultiPoly>>& m);

// Exact integer determinant (fraction-free Bareiss).
mpz_class det_int(std::vector<std::vector<mpz_class>> m);

// Resultant via the Sylvester matrix.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f). Throws usage_error on constants.
mpz_class discriminant(const IntPoly& f);

} // namespace nf
