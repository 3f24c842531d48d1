#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tetrazero/dehn.hpp"
#include "tetrazero/families.hpp"
#include "tetrazero/padic.hpp"
#include "tetrazero/symmetry.hpp"

using namespace tetrazero;

TEST_CASE("template substitution") {
    CHECK(new_family(Rational(5), false) == to_rational(IntEdgeTuple{6, 4, 6, 4, 5, 6}));
    CHECK(new_family(Rational(16), false) == to_rational(IntEdgeTuple{17, 15, 17, 15, 16, 6}));
    CHECK(new_family(Rational(8), true) == to_rational(IntEdgeTuple{9, 7, 6, 8, 7, 9}));
    CHECK_THROWS_AS(new_family(Rational(4), false), std::domain_error);
    CHECK_THROWS_AS(new_family(make_rational(7, 2), true), std::domain_error);

    EdgeTuple half = new_family(make_rational(9, 2), false);
    FamilyInstance inst = make_instance(FamilyTag::NewT, make_rational(9, 2), half);
    CHECK(inst.scale == 2);
    CHECK(inst.scaled == IntEdgeTuple{11, 7, 11, 7, 9, 12});
}

TEST_CASE("first-pair complement carries one family to the other") {
    for (Rational t : {Rational(5), Rational(8), make_rational(21, 4), Rational(100)}) {
        auto image = regge(new_family(t, false), 1);
        REQUIRE(image.has_value());
        CHECK(*image == new_family(t, true));
        // Repeated opposite sums {2t, 2t, t+6}.
        auto sums = opposite_sum_multiset(new_family(t, false));
        std::array<Rational, 3> expect = {t + 6, 2 * t, 2 * t};
        std::sort(expect.begin(), expect.end());
        CHECK(sums == expect);
    }
}

TEST_CASE("sin-cos parametrization instances") {
    auto inst = h1_instance(make_rational(1, 2));
    REQUIRE(inst.has_value());
    CHECK(inst->scale == 13);
    CHECK(inst->scaled == IntEdgeTuple{11, 11, 12, 11, 13, 13});

    CHECK_FALSE(h1_instance(Rational(1)).has_value());  // boundary-flat face
    CHECK_FALSE(h1_instance(Rational(0)).has_value());  // zero edge
    CHECK_FALSE(h1_instance(Rational(2)).has_value());  // negative template entry
}

TEST_CASE("family members have zero verdicts and low dimensions") {
    DehnOptions plain{false, {}};
    for (Rational t :
         {make_rational(1, 2), make_rational(1, 3), make_rational(2, 5), make_rational(3, 5)}) {
        auto inst = h1_instance(t);
        REQUIRE(inst.has_value());
        CHECK(dehn_invariant_is_zero(inst->scaled, plain).is_zero);
        CHECK(angle_span_dimension(inst->scaled) <= 1);
    }
    for (long t : {5, 6, 7, 9, 12}) {
        auto edges = to_integer(new_family(Rational(t), false));
        REQUIRE(edges.has_value());
        CHECK(dehn_invariant_is_zero(*edges, plain).is_zero);
        CHECK(angle_span_dimension(*edges) <= 2);
    }
}

TEST_CASE("bounded search for the second family") {
    // sin a = 1/2 passes the square conditions but gives a flat face, so a
    // search covering it must come back empty.
    CHECK(h2_search(5).instances.empty());

    FamilySearchResult res = h2_search(20);
    CHECK(res.curve == "w^2 = t^4 - 9*t^2 + 9");
    REQUIRE(!res.instances.empty());
    CHECK(res.instances[0].parameter == make_rational(13, 19));
    CHECK(res.instances[0].scaled == IntEdgeTuple{26, 22, 24, 26, 38, 22});
    DehnOptions plain{false, {}};
    for (const auto& inst : res.instances) {
        CHECK(is_nondegenerate(inst.edges));
        CHECK(dehn_invariant_is_zero(inst.scaled, plain).is_zero);
        CHECK(angle_span_dimension(inst.scaled) <= 2);
    }
}

TEST_CASE("bounded search for the third family") {
    CHECK(h3_search(1).instances.empty());
    FamilySearchResult res = h3_search(300);
    CHECK(res.curve == "w^2 = 3*(t^4 + 2*t^2 + 9)");
    REQUIRE(!res.instances.empty());
    CHECK(res.instances[0].parameter == make_rational(263, 266));
    DehnOptions plain{false, {}};
    for (const auto& inst : res.instances) {
        CHECK(is_nondegenerate(inst.edges));
        CHECK(dehn_invariant_is_zero(inst.scaled, plain).is_zero);
        CHECK(angle_span_dimension(inst.scaled) <= 2);
    }
}

TEST_CASE("angle relations of the new family") {
    for (Rational t : {Rational(5), Rational(16), make_rational(17, 2)}) {
        NewFamilyRelations rel = verify_new_family_relations(t);
        CHECK(rel.holds);
        CHECK(rel.cos_double_identity);
        CHECK(rel.cos_triple_identity);
        CHECK(rel.indices_as_stated);
    }
    CHECK_THROWS_AS(verify_new_family_relations(Rational(4)), std::domain_error);
}

TEST_CASE("edge-weighted angle sum certificate") {
    mpfr_prec_t bits = Real::digits_to_bits(50);
    Real bound = Real::from(make_rational(1, 1), bits);
    for (int i = 0; i < 40; ++i) bound = bound / Real::from(10L, bits);
    for (long t : {5, 8, 16}) {
        Real residual = dehn_sum_certificate(Rational(t), 50);
        CHECK(residual < bound);
    }
}
