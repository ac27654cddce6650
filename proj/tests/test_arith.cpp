#include <gmpxx.h>

#include "doctest.h"
#include "nf/arith.hpp"
#include "prop.hpp"

using namespace nf;

TEST_CASE("prime counting matches pi(x)") {
    CHECK(prime_count(1, 1000) == 168);
    CHECK(prime_count(1, 10000) == 1229);
    CHECK(prime_count(1, 100000) == 9592);
    CHECK(prime_count(1, 1000000) == 78498);
    CHECK(prime_count(10, 11) == 1);
    CHECK(prime_count(14, 16) == 0);
    CHECK(prime_count(2, 2) == 1);
}

TEST_CASE("primes_in visits both endpoints") {
    std::vector<u64> got;
    primes_in(2, 13, [&](u64 p) { got.push_back(p); });
    CHECK(got == std::vector<u64>{2, 3, 5, 7, 11, 13});
    got.clear();
    primes_in(990, 1000, [&](u64 p) { got.push_back(p); });
    CHECK(got == std::vector<u64>{991, 997});
    got.clear();
    primes_in(11, 13, [&](u64 p) { got.push_back(p); });
    CHECK(got == std::vector<u64>{11, 13});
}

TEST_CASE("primes_upto") {
    std::vector<u64> ps = primes_upto(30);
    CHECK(ps == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(997));
    CHECK(is_prime(999999937));
    CHECK(is_prime(2305843009213693951ull)); // 2^61 - 1
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));        // Carmichael
    CHECK_FALSE(is_prime(1373653));    // strong pseudoprime to 2, 3
    CHECK_FALSE(is_prime(3215031751ull));
    CHECK_FALSE(is_prime(3825123056546413051ull)); // spsp to first nine prime bases
}

TEST_CASE("factorization") {
    Factorization f = factorize(561);
    CHECK(f.factors == std::vector<std::pair<u64, int>>{{3, 1}, {11, 1}, {17, 1}});
    CHECK(f.value() == 561);
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1ull << 60).factors == std::vector<std::pair<u64, int>>{{2, 60}});
    CHECK(factorize(999999937).factors == std::vector<std::pair<u64, int>>{{999999937, 1}});
    // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
    Factorization g = factorize(18446744073709551615ull);
    CHECK(g.factors == std::vector<std::pair<u64, int>>{{3, 1},
                                                        {5, 1},
                                                        {17, 1},
                                                        {257, 1},
                                                        {641, 1},
                                                        {65537, 1},
                                                        {6700417, 1}});
    CHECK(g.value() == 18446744073709551615ull);
}

TEST_CASE("factorize round-trips on random inputs") {
    prop::run(500, 41, [&](std::mt19937_64& rng, int) {
        u64 n = 1 + rng() % 100000000;
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (size_t i = 0; i < f.factors.size(); i++) {
            CHECK(is_prime(f.factors[i].first));
            if (i) CHECK(f.factors[i - 1].first < f.factors[i].first);
        }
    });
}

TEST_CASE("integer square roots") {
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(1) == 1);
    CHECK(isqrt_u64(3) == 1);
    CHECK(isqrt_u64(4) == 2);
    CHECK(isqrt_u64(18446744073709551615ull) == 4294967295ull);
    CHECK(is_square_u64(0));
    CHECK(is_square_u64(1));
    CHECK(is_square_u64(9));
    CHECK(is_square_u64(18446744065119617025ull)); // 4294967295^2
    CHECK_FALSE(is_square_u64(2));
    CHECK_FALSE(is_square_u64(18446744065119617026ull));
}

TEST_CASE("modular arithmetic") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(3, 0, 7) == 1);
    CHECK(mulmod(18446744073709551615ull, 18446744073709551615ull, 18446744073709551557ull) ==
          3364); // (2^64-1)^2 mod largest 64-bit prime, cross-checked with gmp
}

TEST_CASE("jacobi symbol") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(3, 7) == -1);
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(0, 9) == 0);
    CHECK(jacobi(4, 9) == 1);
    CHECK(jacobi(5, 1) == 1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(jacobi(-1, 7) == -1);
    CHECK_THROWS_AS((void)jacobi(3, 8), usage_error);
}

TEST_CASE("jacobi agrees with euler criterion at primes") {
    prop::run(300, 42, [&](std::mt19937_64& rng, int) {
        u64 p = prop::rng_prime(rng, 3, 100000);
        u64 a = 1 + rng() % (p - 1);
        int euler = powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        CHECK(jacobi((i64)a, p) == euler);
    });
}

TEST_CASE("modular square roots") {
    CHECK(sqrt_mod(4, 13) == 2);
    CHECK(sqrt_mod(3, 13) == 4);
    CHECK(sqrt_mod(0, 13) == 0);
    CHECK_FALSE(sqrt_mod(2, 13).has_value());
    CHECK(sqrt_mod(2, 41) == 17); // 2-adically interesting: 41 = 1 + 8*5
    prop::run(300, 43, [&](std::mt19937_64& rng, int) {
        u64 p = prop::rng_prime(rng, 3, 1000000);
        u64 a = rng() % p;
        auto r = sqrt_mod(a, p);
        if (r) {
            CHECK(mulmod(*r, *r, p) == a);
            CHECK(*r <= p - *r);
        } else {
            CHECK(jacobi((i64)a, p) == -1);
        }
    });
}

TEST_CASE("smallest prime factors") {
    std::vector<std::uint32_t> spf = spf_table(30);
    CHECK(spf[0] == 0);
    CHECK(spf[1] == 0);
    CHECK(spf[2] == 2);
    CHECK(spf[9] == 3);
    CHECK(spf[29] == 29);
    CHECK(spf[30] == 2);
}
