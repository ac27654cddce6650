#include <string>

#include "doctest.h"
#include "nf/spec_io.hpp"
#include "nf/splitting.hpp"

using namespace nf;

static NumberField bundled(const std::string& label) {
    return validate_and_build(load_field_spec(resolve_spec_path(label)));
}

using Pairs = std::vector<std::pair<int, int>>;

TEST_CASE("dedekind index criterion") {
    CHECK(dedekind_index_test(IntPoly::from({-5, 0, 1}), 2) == DedekindResult::index_divisible);
    CHECK(dedekind_index_test(IntPoly::from({1, 0, 1}), 2) == DedekindResult::index_coprime);
    CHECK(dedekind_index_test(IntPoly::from({-5, 0, 1}), 5) == DedekindResult::index_coprime);
    CHECK(dedekind_index_test(IntPoly::from({-2, 0, 0, 1}), 2) == DedekindResult::index_coprime);
    CHECK(dedekind_index_test(IntPoly::from({-2, 0, 0, 1}), 3) == DedekindResult::index_coprime);
}

TEST_CASE("splitting types in the gaussian field") {
    NumberField f = bundled("q_i");
    SplittingType s2 = splitting_type(f, 2, 0);
    CHECK(s2.pairs == Pairs{{2, 1}});
    CHECK_FALSE(s2.exceptional);
    CHECK(splitting_type(f, 5, 0).pairs == Pairs{{1, 1}, {1, 1}});
    CHECK(splitting_type(f, 3, 0).pairs == Pairs{{1, 2}});
    CHECK_THROWS_AS((void)splitting_type(f, 4, 0), usage_error);
    CHECK_THROWS_AS((void)splitting_type(f, 1, 0), usage_error);
}

TEST_CASE("power basis misses the maximal order at 2 for sqrt 5") {
    NumberField f = bundled("q_sqrt5");
    SplittingType s = splitting_type(f, 2, 0);
    CHECK(s.exceptional);
    CHECK(s.pairs.empty());
    CHECK(has_degree_one(f, 2, 0) == Verdict3::unknown);
    CHECK(classify(f, 2, 0) == PrimeClass::Exceptional);
    CHECK(splitting_type(f, 5, 0).pairs == Pairs{{2, 1}});
    CHECK(splitting_type(f, 11, 0).pairs == Pairs{{1, 1}, {1, 1}});
    CHECK(splitting_type(f, 19, 0).pairs == Pairs{{1, 1}, {1, 1}});
    CHECK(splitting_type(f, 13, 0).pairs == Pairs{{1, 2}});
}

TEST_CASE("splitting types for the cube root of 2") {
    NumberField f = bundled("cbrt2");
    CHECK(splitting_type(f, 2, 0).pairs == Pairs{{3, 1}});
    CHECK(splitting_type(f, 3, 0).pairs == Pairs{{3, 1}});
    CHECK(splitting_type(f, 5, 0).pairs == Pairs{{1, 1}, {1, 2}});
    CHECK(splitting_type(f, 7, 0).pairs == Pairs{{1, 3}});
    CHECK(splitting_type(f, 31, 0).pairs == Pairs{{1, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("splitting types in the cyclotomic quartic") {
    NumberField f = bundled("zeta5");
    CHECK(splitting_type(f, 5, 0).pairs == Pairs{{4, 1}});
    CHECK(splitting_type(f, 11, 0).pairs == Pairs{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(splitting_type(f, 19, 0).pairs == Pairs{{1, 2}, {1, 2}});
    CHECK(splitting_type(f, 7, 0).pairs == Pairs{{1, 4}});
}

TEST_CASE("degree-one verdicts and prime classes") {
    NumberField f = bundled("q_i");
    CHECK(has_degree_one(f, 13, 0) == Verdict3::yes);
    CHECK(has_degree_one(f, 3, 0) == Verdict3::no);
    CHECK(has_degree_one(f, 2, 0) == Verdict3::yes);
    CHECK(classify(f, 13, 0) == PrimeClass::Low);
    CHECK(classify(f, 3, 0) == PrimeClass::High);

    NumberField z = bundled("zeta5");
    for (u64 p : {2ull, 3ull, 7ull, 13ull, 23ull}) CHECK(classify(z, p, 0) == PrimeClass::High);
    for (u64 p : {5ull, 11ull, 31ull, 41ull, 61ull}) CHECK(classify(z, p, 0) == PrimeClass::Low);
}

TEST_CASE("splitting degrees sum to the field degree") {
    for (const char* lab : {"q_i", "q_sqrt2", "q_sqrt5", "q_sqrt_m5", "cbrt2", "zeta7_real",
                            "zeta5"}) {
        NumberField f = bundled(lab);
        primes_in(2, 500, [&](u64 p) {
            SplittingType s = splitting_type(f, p, 0);
            if (s.exceptional) return;
            int sum = 0;
            for (auto& [e, fd] : s.pairs) sum += e * fd;
            CHECK(sum == f.d);
            // unramified away from the discriminant
            if (!mpz_divisible_ui_p(f.disc_f.get_mpz_t(), (unsigned long)p))
                for (auto& [e, fd] : s.pairs) CHECK(e == 1);
        });
    }
}

TEST_CASE("inertia degree monoid membership") {
    CHECK(inertia_degree_monoid_member({1}, 1));
    CHECK(inertia_degree_monoid_member({1}, 7));
    CHECK_FALSE(inertia_degree_monoid_member({2}, 1));
    CHECK(inertia_degree_monoid_member({2}, 2));
    CHECK_FALSE(inertia_degree_monoid_member({2}, 3));
    CHECK(inertia_degree_monoid_member({2}, 4));
    CHECK(inertia_degree_monoid_member({3}, 6));
    CHECK_FALSE(inertia_degree_monoid_member({3}, 4));
    CHECK(inertia_degree_monoid_member({2, 3}, 5));
    CHECK_FALSE(inertia_degree_monoid_member({2, 3}, 1));
    CHECK_THROWS_AS((void)inertia_degree_monoid_member({}, 2), usage_error);
}

TEST_CASE("verdict and class names") {
    CHECK(std::string(to_string(Verdict3::yes)) == "yes");
    CHECK(std::string(to_string(Verdict3::no)) == "no");
    CHECK(std::string(to_string(Verdict3::unknown)) == "unknown");
    CHECK(std::string(to_string(PrimeClass::Low)) == "low");
    CHECK(std::string(to_string(PrimeClass::High)) == "high");
    CHECK(std::string(to_string(PrimeClass::Exceptional)) == "exceptional");
}
