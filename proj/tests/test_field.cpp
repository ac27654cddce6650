#include <fstream>

#include "doctest.h"
#include "nf/field.hpp"
#include "nf/spec_io.hpp"
#include "prop.hpp"
#include "props_common.hpp"

using namespace nf;

static NumberField bundled(const std::string& label) {
    return validate_and_build(load_field_spec(resolve_spec_path(label)));
}

static const char* kZeta5Form =
    "x1^4 - x1^3*x2 + x1^2*x2^2 - x1*x2^3 + x2^4 - x1^3*x3 + 2*x1^2*x2*x3 - 3*x1*x2^2*x3 - "
    "x2^3*x3 + x1^2*x3^2 + 2*x1*x2*x3^2 + x2^2*x3^2 - x1*x3^3 - x2*x3^3 + x3^4 - x1^3*x4 + "
    "2*x1^2*x2*x4 + 2*x1*x2^2*x4 - x2^3*x4 - 3*x1^2*x3*x4 - x1*x2*x3*x4 + 2*x2^2*x3*x4 + "
    "2*x1*x3^2*x4 - 3*x2*x3^2*x4 - x3^3*x4 + x1^2*x4^2 - 3*x1*x2*x4^2 + x2^2*x4^2 + "
    "2*x1*x3*x4^2 + 2*x2*x3*x4^2 + x3^2*x4^2 - x1*x4^3 - x2*x4^3 - x3*x4^3 + x4^4";

TEST_CASE("bundled forms render to their golden strings") {
    CHECK(bundled("q_i").psi.render() == "x1^2 + x2^2");
    CHECK(bundled("q_sqrt2").psi.render() == "x1^2 - 2*x2^2");
    CHECK(bundled("q_sqrt5").psi.render() == "x1^2 + x1*x2 - x2^2");
    CHECK(bundled("q_sqrt_m5").psi.render() == "x1^2 + 5*x2^2");
    CHECK(bundled("cbrt2").psi.render() == "x1^3 + 2*x2^3 - 6*x1*x2*x3 + 4*x3^3");
    CHECK(bundled("zeta7_real").psi.render() ==
          "x1^3 - x1^2*x2 - 2*x1*x2^2 + x2^3 + 5*x1^2*x3 - x1*x2*x3 - x2^2*x3 + 6*x1*x3^2 - "
          "2*x2*x3^2 + x3^3");
    CHECK(bundled("zeta5").psi.render() == kZeta5Form);
}

TEST_CASE("gaussian field structure") {
    NumberField f = bundled("q_i");
    CHECK(f.d == 2);
    CHECK(f.disc_f == -4);
    CHECK(f.basis_disc == -4);
    CHECK(f.identity_basis);
    CHECK(f.report.irreducibility_certified);
    CHECK(f.report.warnings.empty());
    REQUIRE(f.galois.has_value());
    CHECK(f.galois->order() == 2);
    CHECK(f.psi.is_homogeneous(2));
    CHECK(eval_norm(f, {mpz_class(3), mpz_class(2)}) == 13);
    CHECK(basis_product(f, {mpz_class(1), mpz_class(1)}, {mpz_class(1), mpz_class(-1)}) ==
          std::vector<mpz_class>{mpz_class(2), mpz_class(0)});
}

TEST_CASE("golden ratio basis changes the lattice discriminant") {
    NumberField f = bundled("q_sqrt5");
    CHECK(f.d == 2);
    CHECK(f.disc_f == 20);   // x^2 - 5
    CHECK(f.basis_disc == 5); // basis (1, (1+sqrt5)/2)
    CHECK_FALSE(f.identity_basis);
    // w2^2 = w2 + 1
    CHECK(basis_product(f, {mpz_class(0), mpz_class(1)}, {mpz_class(0), mpz_class(1)}) ==
          std::vector<mpz_class>{mpz_class(1), mpz_class(1)});
}

TEST_CASE("derived galois groups") {
    NumberField z7 = bundled("zeta7_real");
    CHECK(galois_group(z7).order() == 3); // square discriminant cubic
    NumberField z5 = bundled("zeta5");
    const PermGroup& g = galois_group(z5);
    CHECK(g.order() == 4);
    bool has_4cycle = false;
    for (auto& e : g.elements) has_4cycle = has_4cycle || cycle_type(e) == std::vector<int>{4};
    CHECK(has_4cycle); // cyclotomic quartic is C4, not V4
    NumberField c2 = bundled("cbrt2");
    CHECK(galois_group(c2).order() == 6);
}

TEST_CASE("norm evaluations agree with the determinant route") {
    for (const auto& lab : prop::bundled_labels()) {
        NumberField f = bundled(lab);
        prop::run(60, 11, [&](std::mt19937_64& rng, int) {
            std::vector<mpz_class> v = prop::rng_vec(rng, f.d, -50, 50);
            CHECK(eval_norm(f, v) == eval_norm_numeric(f, v));
        });
    }
}

TEST_CASE("spot norm values") {
    NumberField c2 = bundled("cbrt2");
    CHECK(eval_norm(c2, {mpz_class(1), mpz_class(0), mpz_class(1)}) == 5);
    CHECK(eval_norm(c2, {mpz_class(1), mpz_class(-1), mpz_class(1)}) == 9);
    NumberField z5 = bundled("zeta5");
    CHECK(eval_norm(z5, {mpz_class(1), mpz_class(1), mpz_class(1), mpz_class(1)}) == 1);
    CHECK(eval_norm(z5, {mpz_class(1), mpz_class(-1), mpz_class(0), mpz_class(0)}) == 5);
}

TEST_CASE("hard validation failures") {
    FieldSpec s;
    s.label = "t";

    s.f = IntPoly::from({1, 0, 2}); // non-monic
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.f = IntPoly::from({-1, 0, 1}); // reducible
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.f = IntPoly::from({2, 3, 1}); // rational roots
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.f = IntPoly::from({1, 1}); // degree 1
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.f = IntPoly::from({1, 0, 1});
    s.basis = {{mpq_class(1), mpq_class(0)}, {mpq_class(2), mpq_class(0)}}; // singular
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.basis = {{mpq_class(1), mpq_class(0)}, {mpq_class(0), mpq_class(1, 2)}}; // theta/2
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.basis.clear();
    s.class_number = 3; // h(-4) = 1
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.class_number.reset();
    s.group = std::vector<Perm>{{0, 1, 2}}; // wrong degree
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);

    s.group = std::vector<Perm>{{0, 1}}; // non-transitive closure
    CHECK_THROWS_AS((void)validate_and_build(s), spec_error);
}

TEST_CASE("irreducibility warning is soft") {
    FieldSpec s;
    s.label = "x4p1";
    s.f = IntPoly::from({1, 0, 0, 0, 1}); // irreducible over Q, reducible mod every p
    NumberField f = validate_and_build(s);
    CHECK_FALSE(f.report.irreducibility_certified);
    REQUIRE(f.report.warnings.size() == 1);
    CHECK(f.report.warnings[0] == "irreducibility unverified");
    CHECK(galois_group(f).order() == 4);
}

TEST_CASE("galois group unavailable beyond degree 4") {
    FieldSpec s;
    s.label = "quintic";
    s.f = IntPoly::from({-1, -1, 0, 0, 0, 1}); // x^5 - x - 1
    NumberField f = validate_and_build(s);
    CHECK(f.d == 5);
    CHECK_FALSE(f.galois.has_value());
    CHECK_THROWS_AS((void)galois_group(f), usage_error);
}

TEST_CASE("spec file loading errors") {
    CHECK_THROWS_AS((void)load_field_spec("/nonexistent_spec.json"), usage_error);
    CHECK_THROWS_AS((void)resolve_spec_path("no_such_bundled_label"), usage_error);
    {
        std::ofstream out("/tmp/nf_test_garbage.json");
        out << "garbage not json";
    }
    CHECK_THROWS_AS((void)load_field_spec("/tmp/nf_test_garbage.json"), spec_error);
    {
        std::ofstream out("/tmp/nf_test_short.json");
        out << "{\"label\":\"lin\",\"poly\":[1,1]}";
    }
    CHECK_THROWS_AS((void)validate_and_build(load_field_spec("/tmp/nf_test_short.json")),
                    spec_error);
}

TEST_CASE("bundled specs carry audited class numbers") {
    CHECK(bundled("q_i").spec.class_number == 1);
    CHECK(bundled("q_sqrt_m5").spec.class_number == 2);
    CHECK(bundled("zeta5").spec.class_number == 1);
}
