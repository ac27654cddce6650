#include <cmath>
#include <map>
#include <string>

#include "doctest.h"
#include "nf/density.hpp"
#include "nf/spec_io.hpp"

using namespace nf;

namespace {

NumberField& bundled(const std::string& label) {
    static std::map<std::string, NumberField> cache;
    auto it = cache.find(label);
    if (it == cache.end())
        it = cache.emplace(label, validate_and_build(load_field_spec(resolve_spec_path(label)))).first;
    return it->second;
}

} // namespace

TEST_CASE("prime density bookkeeping") {
    auto split_in_q_i = [](u64 p) {
        return (p == 2 || p % 4 == 1) ? Verdict3::yes : Verdict3::no;
    };
    DensityEstimate e = empirical_prime_density(split_in_q_i, 10000, 1);
    CHECK(e.count == 610);
    CHECK(e.total == 1229);
    CHECK(e.skipped == 0);
    CHECK(e.bound == 10000);

    DensityEstimate e3 = empirical_prime_density(split_in_q_i, 10000, 3);
    CHECK(e3.count == e.count);
    CHECK(e3.total == e.total);

    // unknowns leave the ratio but are tallied
    auto partial = [](u64 p) {
        return (p == 2 || p % 4 == 1) ? Verdict3::yes : Verdict3::unknown;
    };
    DensityEstimate s = empirical_prime_density(partial, 10000, 2);
    CHECK(s.count == 610);
    CHECK(s.total == 610);
    CHECK(s.skipped == 619);
    CHECK(s.ratio() == 1.0);
}

TEST_CASE("integer density bookkeeping") {
    auto even = [](u64 n) { return n % 2 == 0 ? Verdict3::yes : Verdict3::no; };
    DensityEstimate e = empirical_integer_density(even, 10000, 2);
    CHECK(e.count == 5000);
    CHECK(e.total == 10000);
    CHECK(e.skipped == 0);

    NumberField& q_i = bundled("q_i");
    auto pred = [&](u64 n) { return is_norm_integer(q_i, n, 0, false).kind; };
    DensityEstimate d = empirical_integer_density(pred, 10000, 2);
    CHECK(d.count == 2749);
    CHECK(d.total == 10000);
    CHECK(d.skipped == 0);
}

TEST_CASE("sieve bound product") {
    CHECK(sieve_bound({}).str() == "1/1");

    SieveBound b = sieve_bound({3, 7});
    CHECK(b.str() == "301/441"); // (9-2)/9 * (49-6)/49 kept unreduced
    CHECK(b.value() == mpq_class(43, 63));

    CHECK(sieve_bound({2}).str() == "3/4");
    CHECK(sieve_bound({2}).value() == mpq_class(3, 4));

    CHECK_THROWS_AS((void)sieve_bound({4}), usage_error);
    CHECK_THROWS_AS((void)sieve_bound({3, 3}), usage_error);
}

TEST_CASE("divergence curve checkpoints") {
    NumberField& q_i = bundled("q_i");
    auto pts = divergence_curve(q_i, {100, 1000}, 0, 1);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == 100);
    CHECK(pts[0].count == 13);
    CHECK(pts[0].sum == doctest::Approx(0.8106653344689393).epsilon(1e-12));
    CHECK(pts[1].x == 1000);
    CHECK(pts[1].count == 87);
    CHECK(pts[1].sum == doctest::Approx(1.015638457625311).epsilon(1e-12));

    auto pts4 = divergence_curve(q_i, {100, 1000}, 0, 4);
    CHECK(pts4[0].sum == pts[0].sum);
    CHECK(pts4[1].sum == pts[1].sum);

    CHECK_THROWS_AS((void)divergence_curve(q_i, {1000, 100}, 0, 1), usage_error);
}

TEST_CASE("chebotarev table for the non-galois cubic") {
    NumberField& c = bundled("cbrt2");
    ChebotarevTable t = chebotarev_table(c, 10000, 0, 2);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.total == 1227);
    CHECK(t.skipped == 2); // 2 and 3 divide the discriminant

    CHECK(t.rows[0].type == std::vector<int>{1, 1, 1});
    CHECK(t.rows[0].count == 200);
    CHECK(t.rows[0].theoretical == mpq_class(1, 6));

    CHECK(t.rows[1].type == std::vector<int>{1, 2});
    CHECK(t.rows[1].count == 616);
    CHECK(t.rows[1].theoretical == mpq_class(1, 2));

    CHECK(t.rows[2].type == std::vector<int>{3});
    CHECK(t.rows[2].count == 411);
    CHECK(t.rows[2].theoretical == mpq_class(1, 3));

    for (auto& r : t.rows)
        CHECK(r.empirical == doctest::Approx((double)r.count / (double)t.total).epsilon(1e-15));
}

TEST_CASE("chebotarev table for cyclic fields") {
    NumberField& z7 = bundled("zeta7_real");
    ChebotarevTable t7 = chebotarev_table(z7, 10000, 0, 1);
    REQUIRE(t7.rows.size() == 2);
    CHECK(t7.skipped == 1); // p = 7
    CHECK(t7.rows[0].type == std::vector<int>{1, 1, 1});
    CHECK(t7.rows[0].count == 403);
    CHECK(t7.rows[0].theoretical == mpq_class(1, 3));
    CHECK(t7.rows[1].type == std::vector<int>{3});
    CHECK(t7.rows[1].count == 825);
    CHECK(t7.rows[1].theoretical == mpq_class(2, 3));

    NumberField& z5 = bundled("zeta5");
    ChebotarevTable t5 = chebotarev_table(z5, 10000, 0, 2);
    REQUIRE(t5.rows.size() == 3);
    CHECK(t5.skipped == 1); // p = 5
    CHECK(t5.rows[0].type == std::vector<int>{1, 1, 1, 1});
    CHECK(t5.rows[0].count == 306);
    CHECK(t5.rows[0].theoretical == mpq_class(1, 4));
    CHECK(t5.rows[1].type == std::vector<int>{2, 2});
    CHECK(t5.rows[1].count == 303);
    CHECK(t5.rows[1].theoretical == mpq_class(1, 4));
    CHECK(t5.rows[2].type == std::vector<int>{4});
    CHECK(t5.rows[2].count == 619);
    CHECK(t5.rows[2].theoretical == mpq_class(1, 2));

    NumberField& q_i = bundled("q_i");
    ChebotarevTable ti = chebotarev_table(q_i, 1000, 0, 1);
    REQUIRE(ti.rows.size() == 2);
    CHECK(ti.rows[0].count == 80);
    CHECK(ti.rows[1].count == 87);
    CHECK(ti.skipped == 1); // p = 2
}

TEST_CASE("ap search on handmade bitmaps") {
    auto make = [](std::vector<u64> members, u64 n) {
        std::vector<u64> bits(n / 64 + 1, 0);
        for (u64 m : members) bits[m >> 6] |= u64(1) << (m & 63);
        return bits;
    };

    auto w4 = ap_search(make({1, 5, 9, 13}, 13), 13, 4);
    REQUIRE(w4.has_value());
    CHECK(w4->a == 1);
    CHECK(w4->q == 4);
    CHECK(w4->k == 4);
    CHECK(w4->members == std::vector<u64>{1, 5, 9, 13});

    auto w5 = ap_search(make({2, 9, 16, 23, 30}, 30), 30, 5);
    REQUIRE(w5.has_value());
    CHECK(w5->a == 2);
    CHECK(w5->q == 7);

    auto w3 = ap_search(make({1, 4, 7}, 7), 7, 3);
    REQUIRE(w3.has_value());
    CHECK(w3->q == 3);
    CHECK(w3->a == 1);

    CHECK_FALSE(ap_search(make({}, 40), 40, 3).has_value());
    CHECK_THROWS_AS((void)ap_search(make({1}, 10), 10, 2), usage_error);
    CHECK_THROWS_AS((void)ap_search(make({1}, 10), 100, 3), usage_error);
}
