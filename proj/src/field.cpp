#include "nf/field.hpp"

#include <algorithm>

#include "nf/errors.hpp"
#include "nf/modp_factor.hpp"
#include "nf/quadratic.hpp"

namespace nf {

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// Solves M x = rhs for each rhs later; returns M^{-1}. Throws spec_error if singular.
QMat invert(QMat m, const std::string& what) {
    const int n = (int)m.size();
    QMat inv(n, QVec(n, 0));
    for (int i = 0; i < n; i++) inv[i][i] = 1;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw spec_error(what + " is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class s = m[col][col];
        for (int c = 0; c < n; c++) { m[col][c] /= s; inv[col][c] /= s; }
        for (int r = 0; r < n; r++) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class t = m[r][col];
            for (int c = 0; c < n; c++) {
                m[r][c] -= t * m[col][c];
                inv[r][c] -= t * inv[col][c];
            }
        }
    }
    return inv;
}

mpq_class det_rational(QMat m) {
    const int n = (int)m.size();
    mpq_class det = 1;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
        det *= m[col][col];
        for (int r = col + 1; r < n; r++) {
            if (m[r][col] == 0) continue;
            mpq_class t = m[r][col] / m[col][col];
            for (int c = col; c < n; c++) m[r][c] -= t * m[col][c];
        }
    }
    return det;
}

// Product of two rational polynomials reduced mod the monic integer f.
QVec mul_mod_f(const QVec& a, const QVec& b, const IntPoly& f) {
    const int d = f.degree();
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (int i = 0; i < d; i++) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; j++) prod[i + j] += a[i] * b[j];
    }
    for (int k = 2 * d - 2; k >= d; k--) {
        if (prod[k] == 0) continue;
        mpq_class t = prod[k];
        prod[k] = 0;
        for (int i = 0; i < d; i++) prod[k - d + i] -= t * mpq_class(f.c[i]);
    }
    prod.resize(d);
    return prod;
}

// Any rational root of a monic integer polynomial is an integer dividing c0.
bool has_integer_root(const IntPoly& f) {
    if (f.c[0] == 0) return true;
    mpz_class a0 = abs(f.c[0]);
    if (!a0.fits_ulong_p()) return false; // root test skipped for huge constant terms
    std::vector<u64> divs{1};
    for (auto [p, e] : factorize(a0.get_ui()).factors) {
        size_t n = divs.size();
        u64 pk = 1;
        for (int i = 0; i < e; i++) {
            pk *= p;
            for (size_t j = 0; j < n; j++) divs.push_back(divs[j] * pk);
        }
    }
    for (u64 t : divs) {
        if (f.eval(mpz_class(t)) == 0) return true;
        if (f.eval(-mpz_class(t)) == 0) return true;
    }
    return false;
}

} // namespace

NumberField validate_and_build(const FieldSpec& spec) {
    NumberField nf;
    nf.spec = spec;
    const IntPoly& f = spec.f;
    const int d = f.degree();
    if (d < 2) throw spec_error("defining polynomial must have degree >= 2");
    if (f.lc() != 1) throw spec_error("defining polynomial must be monic");
    nf.d = d;
    nf.disc_f = discriminant(f);

    if (nf.disc_f == 0) throw spec_error("reducible: repeated factor");
    if (d == 2 && mpz_perfect_square_p(nf.disc_f.get_mpz_t()))
        throw spec_error("reducible: square discriminant");
    if (has_integer_root(f)) throw spec_error("reducible: integer root");

    // Certificate: irreducible mod p for some small p not dividing disc(f).
    {
        std::vector<u64> small = primes_upto(100); // the first 25 primes
        for (u64 p : small) {
            if (nf.disc_f % mpz_class(p) == 0) continue;
            auto ct = cycle_type_mod_p(f, p);
            if (ct && ct->size() == 1 && (*ct)[0] == d) {
                nf.report.irreducibility_certified = true;
                break;
            }
        }
        if (!nf.report.irreducibility_certified)
            nf.report.warnings.push_back("irreducibility unverified");
    }

    // Basis rows: omega_i in the power basis. Empty input means the power basis.
    QMat B(d, QVec(d, 0));
    if (spec.basis.empty()) {
        nf.identity_basis = true;
        for (int i = 0; i < d; i++) B[i][i] = 1;
    } else {
        if ((int)spec.basis.size() != d)
            throw spec_error("basis must have d rows");
        for (int i = 0; i < d; i++) {
            if ((int)spec.basis[i].size() != d)
                throw spec_error("basis rows must have d entries");
            for (int j = 0; j < d; j++) {
                B[i][j] = spec.basis[i][j];
                B[i][j].canonicalize();
            }
        }
        nf.identity_basis = true;
        for (int i = 0; i < d && nf.identity_basis; i++)
            for (int j = 0; j < d; j++)
                if (B[i][j] != (i == j ? 1 : 0)) { nf.identity_basis = false; break; }
    }

    QMat Bt(d, QVec(d));
    for (int i = 0; i < d; i++)
        for (int j = 0; j < d; j++) Bt[i][j] = B[j][i];
    QMat Btinv = invert(Bt, "basis");

    // omega_i omega_j in the power basis, then back through B^T; every
    // coordinate must be an integer for the basis to span a ring.
    nf.sc.assign(d, std::vector<std::vector<mpz_class>>(d, std::vector<mpz_class>(d)));
    for (int i = 0; i < d; i++) {
        for (int j = i; j < d; j++) {
            QVec prod = mul_mod_f(B[i], B[j], f);
            for (int k = 0; k < d; k++) {
                mpq_class x = 0;
                for (int l = 0; l < d; l++) x += Btinv[k][l] * prod[l];
                x.canonicalize();
                if (x.get_den() != 1)
                    throw spec_error("non-integral structure constants");
                nf.sc[i][j][k] = x.get_num();
                nf.sc[j][i][k] = x.get_num();
            }
        }
    }

    // R(omega_i): column c holds the coordinates of omega_i * omega_c.
    nf.regrep.assign(d, std::vector<std::vector<mpz_class>>(d, std::vector<mpz_class>(d)));
    for (int i = 0; i < d; i++)
        for (int r = 0; r < d; r++)
            for (int c = 0; c < d; c++) nf.regrep[i][r][c] = nf.sc[i][c][r];

    {
        std::vector<std::vector<MultiPoly>> m(d, std::vector<MultiPoly>(d, MultiPoly(d)));
        for (int r = 0; r < d; r++)
            for (int c = 0; c < d; c++)
                for (int i = 0; i < d; i++) {
                    if (nf.regrep[i][r][c] == 0) continue;
                    std::vector<int> e(d, 0);
                    e[i] = 1;
                    m[r][c].add_term(e, nf.regrep[i][r][c]);
                }
        nf.psi = det_linear_forms(m);
    }
    if (!nf.psi.is_homogeneous(d))
        throw spec_error("norm form is not homogeneous of degree d");

    {
        mpq_class detB = det_rational(B);
        mpq_class disc_b = mpq_class(nf.disc_f) * detB * detB;
        disc_b.canonicalize();
        if (disc_b.get_den() != 1)
            throw spec_error("basis discriminant is not an integer");
        nf.basis_disc = disc_b.get_num();
    }

    if (spec.group) {
        for (const Perm& g : *spec.group)
            if ((int)g.size() != d) throw spec_error("group generators must act on d points");
        PermGroup G = close(d, *spec.group);
        if (!is_transitive(G)) throw spec_error("group is not transitive");
        mpz_class fact = 1;
        for (int i = 2; i <= d; i++) fact *= i;
        if (fact % mpz_class((unsigned long)G.order()) != 0)
            throw spec_error("group order does not divide d!");
        nf.galois = std::move(G);
    }

    if (spec.class_number) {
        if (*spec.class_number <= 0) throw spec_error("class number must be positive");
        if (d == 2) {
            if (nf.basis_disc.fits_slong_p() &&
                is_fundamental_discriminant(nf.basis_disc.get_si())) {
                long long h = class_number(nf.basis_disc.get_si());
                if (h != *spec.class_number)
                    throw spec_error("declared class number disagrees with the computed one");
            } else {
                nf.report.warnings.push_back("class number unaudited: non-fundamental or oversized discriminant");
            }
        }
    }

    return nf;
}

mpz_class eval_norm(const NumberField& nf, const std::vector<mpz_class>& v) {
    if ((int)v.size() != nf.d) throw usage_error("vector length must equal the degree");
    return nf.psi.eval(v);
}

mpz_class eval_norm_numeric(const NumberField& nf, const std::vector<mpz_class>& v) {
    if ((int)v.size() != nf.d) throw usage_error("vector length must equal the degree");
    const int d = nf.d;
    std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d, 0));
    for (int i = 0; i < d; i++) {
        if (v[i] == 0) continue;
        for (int r = 0; r < d; r++)
            for (int c = 0; c < d; c++) m[r][c] += v[i] * nf.regrep[i][r][c];
    }
    return det_int(std::move(m));
}

std::vector<mpz_class> basis_product(const NumberField& nf,
                                     const std::vector<mpz_class>& u,
                                     const std::vector<mpz_class>& v) {
    if ((int)u.size() != nf.d || (int)v.size() != nf.d)
        throw usage_error("vector length must equal the degree");
    std::vector<mpz_class> w(nf.d, 0);
    for (int i = 0; i < nf.d; i++) {
        if (u[i] == 0) continue;
        for (int j = 0; j < nf.d; j++) {
            if (v[j] == 0) continue;
            mpz_class uv = u[i] * v[j];
            for (int k = 0; k < nf.d; k++) w[k] += uv * nf.sc[i][j][k];
        }
    }
    return w;
}

const PermGroup& galois_group(NumberField& nf) {
    if (nf.galois) return *nf.galois;
    if (nf.d > 4)
        throw usage_error("no group data supplied and degree exceeds 4");
    nf.galois = galois_group_small(nf.spec.f);
    return *nf.galois;
}

} // namespace nf
