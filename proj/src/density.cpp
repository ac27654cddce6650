#include "nf/density.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "nf/errors.hpp"
#include "nf/modp_factor.hpp"

namespace nf {

namespace {

constexpr u64 kChunk = 65536;

// Fixed-size chunks over the inclusive range [lo0, hi0], claimed through an
// atomic counter; every chunk writes into its own slot, so merges in chunk
// order are deterministic regardless of thread count.
u64 chunk_count(u64 lo0, u64 hi0) { return (hi0 - lo0) / kChunk + 1; }

void run_chunks(u64 lo0, u64 hi0, int threads,
                const std::function<void(u64, u64, u64)>& fn) {
    if (hi0 < lo0) return;
    u64 nchunks = chunk_count(lo0, hi0);
    if (threads <= 1) {
        for (u64 c = 0; c < nchunks; c++) {
            u64 lo = lo0 + c * kChunk;
            fn(c, lo, std::min(hi0, lo + (kChunk - 1)));
        }
        return;
    }
    std::atomic<u64> next{0};
    auto worker = [&] {
        for (;;) {
            u64 c = next.fetch_add(1);
            if (c >= nchunks) break;
            u64 lo = lo0 + c * kChunk;
            fn(c, lo, std::min(hi0, lo + (kChunk - 1)));
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; i++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

struct CountSlot {
    u64 count = 0;
    u64 skipped = 0;
    u64 tested = 0;
};

} // namespace

DensityEstimate empirical_prime_density(const std::function<Verdict3(u64)>& pred, u64 x,
                                        int threads) {
    if (x < 2) return {0, 0, 0, x};
    std::vector<CountSlot> slots(chunk_count(2, x));
    run_chunks(2, x, threads, [&](u64 c, u64 lo, u64 hi) {
        CountSlot& s = slots[c];
        primes_in(lo, hi, [&](u64 p) {
            s.tested++;
            switch (pred(p)) {
                case Verdict3::yes: s.count++; break;
                case Verdict3::no: break;
                case Verdict3::unknown: s.skipped++; break;
            }
        });
    });
    DensityEstimate out;
    out.bound = x;
    for (auto& s : slots) {
        out.count += s.count;
        out.skipped += s.skipped;
        out.total += s.tested;
    }
    out.total -= out.skipped;
    return out;
}

DensityEstimate empirical_integer_density(const std::function<Verdict3(u64)>& pred, u64 x,
                                          int threads) {
    if (x < 1) return {0, 0, 0, x};
    std::vector<CountSlot> slots(chunk_count(1, x));
    run_chunks(1, x, threads, [&](u64 c, u64 lo, u64 hi) {
        CountSlot& s = slots[c];
        for (u64 n = lo; n <= hi; n++) {
            s.tested++;
            switch (pred(n)) {
                case Verdict3::yes: s.count++; break;
                case Verdict3::no: break;
                case Verdict3::unknown: s.skipped++; break;
            }
        }
    });
    DensityEstimate out;
    out.bound = x;
    for (auto& s : slots) {
        out.count += s.count;
        out.skipped += s.skipped;
        out.total += s.tested;
    }
    out.total -= out.skipped;
    return out;
}

SieveBound sieve_bound(const std::vector<u64>& ps) {
    std::set<u64> seen;
    SieveBound out;
    for (u64 p : ps) {
        if (!is_prime(p)) throw usage_error("sieve set must consist of primes");
        if (!seen.insert(p).second) throw usage_error("repeated prime in sieve set");
        mpz_class pz((unsigned long)p);
        out.num *= pz * pz - (pz - 1);
        out.den *= pz * pz;
    }
    return out;
}

std::vector<DivergencePoint> divergence_curve(const NumberField& nf,
                                              const std::vector<u64>& checkpoints, u64 seed,
                                              int threads) {
    if (checkpoints.empty()) throw usage_error("no checkpoints given");
    for (size_t i = 0; i + 1 < checkpoints.size(); i++)
        if (checkpoints[i] >= checkpoints[i + 1])
            throw usage_error("checkpoints must be strictly ascending");
    const size_t k = checkpoints.size();
    u64 x = checkpoints.back();
    if (x < 2) {
        std::vector<DivergencePoint> out;
        for (u64 c : checkpoints) out.push_back({c, 0.0, 0});
        return out;
    }
    struct Slot {
        std::vector<double> sum;
        std::vector<u64> cnt;
    };
    std::vector<Slot> slots(chunk_count(2, x));
    run_chunks(2, x, threads, [&](u64 c, u64 lo, u64 hi) {
        Slot& s = slots[c];
        s.sum.assign(k, 0.0);
        s.cnt.assign(k, 0);
        primes_in(lo, hi, [&](u64 p) {
            if (classify(nf, p, seed) != PrimeClass::High) return;
            size_t i =
                std::lower_bound(checkpoints.begin(), checkpoints.end(), p) - checkpoints.begin();
            for (; i < k; i++) {
                s.sum[i] += 1.0 / (double)p;
                s.cnt[i]++;
            }
        });
    });
    std::vector<DivergencePoint> out(k);
    for (size_t i = 0; i < k; i++) out[i].x = checkpoints[i];
    for (auto& s : slots)
        for (size_t i = 0; i < k && i < s.sum.size(); i++) {
            out[i].sum += s.sum[i];
            out[i].count += s.cnt[i];
        }
    return out;
}

ChebotarevTable chebotarev_table(NumberField& nf, u64 x, u64 seed, int threads) {
    (void)seed;
    const PermGroup& g = galois_group(nf);
    PermGroup h = point_stabilizer(g, 0);
    TheoreticalDensities th = theoretical_densities(g, h);

    ChebotarevTable out;
    out.bound = x;
    if (x < 2) {
        for (auto& [type, q] : th.by_type) out.rows.push_back({type, 0, 0.0, q});
        return out;
    }
    struct Slot {
        std::map<std::vector<int>, u64> tally;
        u64 skipped = 0;
    };
    std::vector<Slot> slots(chunk_count(2, x));
    run_chunks(2, x, threads, [&](u64 c, u64 lo, u64 hi) {
        Slot& s = slots[c];
        primes_in(lo, hi, [&](u64 p) {
            if (mpz_divisible_ui_p(nf.disc_f.get_mpz_t(), (unsigned long)p)) {
                s.skipped++;
                return;
            }
            auto type = cycle_type_mod_p(nf.spec.f, p);
            if (!type) {
                s.skipped++;
                return;
            }
            s.tally[*type]++;
        });
    });
    std::map<std::vector<int>, u64> tally;
    for (auto& s : slots) {
        out.skipped += s.skipped;
        for (auto& [t, c] : s.tally) tally[t] += c;
    }
    for (auto& [t, c] : tally) out.total += c;
    std::map<std::vector<int>, mpq_class> theory = th.by_type;
    for (auto& [t, c] : tally)
        if (!theory.count(t)) theory[t] = 0;
    for (auto& [t, q] : theory) {
        u64 c = tally.count(t) ? tally[t] : 0;
        double emp = out.total ? (double)c / (double)out.total : 0.0;
        out.rows.push_back({t, c, emp, q});
    }
    return out;
}

std::optional<APWitness> ap_search(const std::vector<u64>& bits, u64 n, int k) {
    if (k < 3) throw usage_error("progression length must be at least 3");
    if (n + 1 > bits.size() * 64) throw usage_error("bitmap shorter than bound");
    u64 span = (u64)(k - 1);
    if (n < 1 || span >= n) return std::nullopt;
    for (u64 q = 1; span * q <= n - 1; q++) {
        for (u64 a = 1; a + span * q <= n; a++) {
            bool ok = true;
            for (u64 j = 0; j < (u64)k; j++)
                if (!bitmap_get(bits, a + j * q)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            APWitness w;
            w.a = a;
            w.q = q;
            w.k = k;
            for (u64 j = 0; j < (u64)k; j++) w.members.push_back(a + j * q);
            return w;
        }
    }
    return std::nullopt;
}

} // namespace nf
