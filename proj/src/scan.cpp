#include <cstring>
#include <vector>

#include "nf/errors.hpp"
#include "nf/represent.hpp"

namespace nf {

namespace {

// Advances a difference chain of DEG+1 registers one step per point and
// records |value| in the bitmap. The register chain carries the successive
// finite differences of the polynomial restricted to the innermost axis, so
// each step costs DEG additions. The chain lives in a local array so the
// bitmap store cannot alias it and force reloads.
template <int DEG>
void run_chain(const i64* r, long long steps, u64 N, u64* bits) {
    i64 reg[DEG + 1];
    for (int i = 0; i <= DEG; i++) reg[i] = r[i];
    for (long long t = 0; t < steps; t++) {
        i64 val = reg[0];
        u64 a = val < 0 ? 0ull - (u64)val : (u64)val;
        if (a - 1 < N) bits[a >> 6] |= 1ull << (a & 63);
        for (int i = 0; i < DEG; i++) reg[i] += reg[i + 1];
    }
}

void run_chain_dyn(const i64* r, int deg, long long steps, u64 N, u64* bits) {
    i64 reg[16];
    for (int i = 0; i <= deg; i++) reg[i] = r[i];
    for (long long t = 0; t < steps; t++) {
        i64 val = reg[0];
        u64 a = val < 0 ? 0ull - (u64)val : (u64)val;
        if (a - 1 < N) bits[a >> 6] |= 1ull << (a & 63);
        for (int i = 0; i < deg; i++) reg[i] += reg[i + 1];
    }
}

struct Sweeper {
    int d;          // chain length minus one (max per-axis degree)
    int m;          // number of swept axes
    long long steps; // 2B + 1 points per axis
    u64 N;
    u64* bits;
    std::vector<std::vector<i64>> scratch; // one buffer per non-innermost level

    // state holds (d+1)^(m-axis) difference values, axis-major.
    void sweep(int axis, i64* state) {
        if (axis == m - 1) {
            switch (d) {
                case 2: run_chain<2>(state, steps, N, bits); break;
                case 3: run_chain<3>(state, steps, N, bits); break;
                case 4: run_chain<4>(state, steps, N, bits); break;
                case 5: run_chain<5>(state, steps, N, bits); break;
                case 6: run_chain<6>(state, steps, N, bits); break;
                default: run_chain_dyn(state, d, steps, N, bits); break;
            }
            return;
        }
        size_t sub = scratch[axis].size();
        i64* buf = scratch[axis].data();
        for (long long t = 0; t < steps; t++) {
            std::memcpy(buf, state, sub * sizeof(i64));
            sweep(axis + 1, buf);
            for (int i = 0; i < d; i++) {
                i64* lo = state + (size_t)i * sub;
                const i64* hi = state + (size_t)(i + 1) * sub;
                for (size_t j = 0; j < sub; j++) lo[j] += hi[j];
            }
        }
    }
};

} // namespace

std::vector<u64> norm_values_bitmap(const NumberField& nf, u64 N, long long B) {
    if (B < 1) throw usage_error("box bound must be at least 1");
    const int d = nf.d;

    // Intermediate chain values are mixed finite differences over a window
    // extending slightly past the box; each difference at most doubles the
    // magnitude bound.
    mpz_class bound = 0;
    for (auto& [mono, c] : nf.psi.t) bound += abs(c);
    mpz_class win((long)(B + 2 * d));
    mpz_pow_ui(win.get_mpz_t(), win.get_mpz_t(), d);
    bound *= win;
    bound <<= d * (d - 1);
    mpz_class lim = 1;
    lim <<= 63;
    if (bound >= lim) throw guard_error("box too large for 64-bit difference scan");

    std::vector<u64> bits((N >> 6) + 1, 0);
    std::vector<mpz_class> coords(d, 0);
    const long long steps = 2 * B + 1;

    for (int k = 0; k < d; k++) {
        const int m = d - 1 - k;
        if (m == 0) {
            for (long long vk = 1; vk <= B; vk++) {
                coords[k] = (long)vk;
                mpz_class val = nf.psi.eval(coords);
                mpz_class a = abs(val);
                if (a >= 1 && a <= mpz_class((unsigned long)N)) {
                    u64 v = a.get_ui();
                    bits[v >> 6] |= 1ull << (v & 63);
                }
            }
            coords[k] = 0;
            continue;
        }
        size_t tsz = 1;
        for (int i = 0; i < m; i++) tsz *= (size_t)(d + 1);
        std::vector<i64> T(tsz);

        Sweeper sw;
        sw.d = d;
        sw.m = m;
        sw.steps = steps;
        sw.N = N;
        sw.bits = bits.data();
        sw.scratch.resize(m > 1 ? m - 1 : 0);
        {
            size_t sub = tsz;
            for (int a = 0; a + 1 < m; a++) {
                sub /= (size_t)(d + 1);
                sw.scratch[a].resize(sub);
            }
        }

        for (long long vk = 1; vk <= B; vk++) {
            coords[k] = (long)vk;
            // seed: evaluate at grid offsets from the corner (-B, ..., -B)
            std::vector<int> idx(m, 0);
            for (size_t flat = 0; flat < tsz; flat++) {
                size_t rem = flat;
                for (int a = m - 1; a >= 0; a--) {
                    idx[a] = (int)(rem % (size_t)(d + 1));
                    rem /= (size_t)(d + 1);
                }
                for (int a = 0; a < m; a++) coords[k + 1 + a] = (long)(-B + idx[a]);
                T[flat] = (i64)nf.psi.eval(coords).get_si();
            }
            for (int a = 0; a < m; a++) coords[k + 1 + a] = 0;
            // difference transform along each axis
            size_t stride = tsz / (size_t)(d + 1);
            for (int a = 0; a < m; a++) {
                size_t outer = tsz / ((size_t)(d + 1) * stride);
                for (size_t o = 0; o < outer; o++)
                    for (size_t in = 0; in < stride; in++) {
                        i64* line = T.data() + o * (size_t)(d + 1) * stride + in;
                        for (int lev = 1; lev <= d; lev++)
                            for (int i = d; i >= lev; i--)
                                line[(size_t)i * stride] -= line[(size_t)(i - 1) * stride];
                    }
                stride /= (size_t)(d + 1);
            }
            sw.sweep(0, T.data());
        }
        coords[k] = 0;
    }
    return bits;
}

} // namespace nf
