#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tetrazero/dehn.hpp"
#include "tetrazero/padic.hpp"
#include "tetrazero/symmetry.hpp"

using namespace tetrazero;

namespace {

EdgeTuple tuple_of(std::initializer_list<long> values) {
    EdgeTuple out;
    int i = 0;
    for (long v : values) out[i++] = Rational(v);
    return out;
}

VertexPermutation perm(int a, int b, int c, int d) { return VertexPermutation{{a, b, c, d}}; }

}  // namespace

TEST_CASE("vertex relabelings act on tuple positions") {
    EdgeTuple t = tuple_of({10, 20, 1, 2, 3, 4});  // (x, y, a, b, c, d)

    CHECK(apply_s4(t, perm(1, 2, 3, 4)) == t);
    // Swapping vertices 1 and 2 keeps the first pair and reverses the rest.
    CHECK(apply_s4(t, perm(2, 1, 3, 4)) == tuple_of({10, 20, 4, 3, 2, 1}));

    EdgeTuple u = tuple_of({9, 7, 9, 7, 8, 6});
    CHECK(apply_s4(u, perm(2, 1, 4, 3)) == tuple_of({9, 7, 7, 9, 6, 8}));
}

TEST_CASE("relabeling preserves the length multiset and pair structure") {
    const auto& perms = all_vertex_permutations();
    CHECK(perms.size() == 24);
    for (int iter = 0; iter < 100; ++iter) {
        EdgeTuple t;
        for (auto& v : t) v = testing::random_rational();
        const VertexPermutation& g = perms[testing::random_int(0, 23)];
        EdgeTuple img = apply_s4(t, g);

        std::array<Rational, 6> a = t, b = img;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        CHECK(opposite_sum_multiset(t) == opposite_sum_multiset(img));
    }
}

TEST_CASE("canonical form is the least relabeled image") {
    IntEdgeTuple t = {9, 7, 9, 7, 8, 6};
    IntEdgeTuple canon = s4_canonical(t);
    const auto& perms = all_vertex_permutations();
    for (const auto& g : perms) CHECK(canon <= apply_s4(t, g));
    CHECK(s4_canonical(canon) == canon);
}

TEST_CASE("semiperimeter complement transform") {
    EdgeTuple t8 = tuple_of({9, 7, 9, 7, 8, 6});
    auto moved = regge(t8, 1);
    REQUIRE(moved.has_value());
    CHECK(*moved == tuple_of({9, 7, 6, 8, 7, 9}));

    // Equal complement lengths are a fixed point.
    EdgeTuple fixed = tuple_of({5, 9, 4, 4, 4, 4});
    CHECK(*regge(fixed, 1) == fixed);

    // Involution on random tuples wherever the move applies.
    for (int iter = 0; iter < 200; ++iter) {
        EdgeTuple t;
        for (auto& v : t) v = testing::random_rational();
        for (int pair = 1; pair <= 3; ++pair) {
            auto once = regge(t, pair);
            if (!once) continue;
            auto twice = regge(*once, pair);
            REQUIRE(twice.has_value());
            CHECK(*twice == t);
        }
    }

    // A dominant edge drives a complement non-positive.
    CHECK_FALSE(regge(tuple_of({1, 1, 10, 1, 1, 1}), 1).has_value());
}

TEST_CASE("the transform preserves opposite sums and the determinant") {
    for (int iter = 0; iter < 200; ++iter) {
        IntEdgeTuple e = testing::random_valid_tuple(12);
        EdgeTuple t = to_rational(e);
        for (int pair = 1; pair <= 3; ++pair) {
            auto img = regge(t, pair);
            if (!img) continue;
            CHECK(opposite_sum_multiset(*img) == opposite_sum_multiset(t));
            CHECK(cayley_menger(*img).det == cayley_menger(t).det);
        }
    }
}

TEST_CASE("angle transform mirrors the length transform") {
    // The angles of the transformed tuple match the transformed angles.
    IntEdgeTuple e = {9, 7, 9, 7, 8, 6};
    AngleData trig = dihedral_trig(to_rational(e));
    std::array<Real, 6> angles = trig.angles(40);
    auto img = regge(to_rational(e), 1);
    REQUIRE(img.has_value());
    std::array<Real, 6> expect = regge_angles(angles, 1);
    AngleData img_trig = dihedral_trig(*img);
    mpfr_prec_t bits = Real::digits_to_bits(40);
    Real tol = Real::from(make_rational(1, 1), bits);
    for (int i = 0; i < 30; ++i) tol = tol / Real::from(10L, bits);
    for (int pos = 0; pos < kEdgeCount; ++pos)
        CHECK((img_trig.angle(pos, 40) - expect[pos]).abs() < tol);

    // A right-angle pattern fixed by the transform.
    mpfr_prec_t b2 = Real::digits_to_bits(40);
    Real pi = Real::pi(b2);
    Real half = pi / Real::from(2L, b2);
    Real third = pi / Real::from(3L, b2);
    std::array<Real, 6> pattern = {half, half, third, third, third, third};
    std::array<Real, 6> moved = regge_angles(pattern, 1);
    for (int pos = 0; pos < kEdgeCount; ++pos)
        CHECK((moved[pos] - pattern[pos]).abs() < tol);
}

TEST_CASE("the transform preserves zero verdicts and dimensions on integer images") {
    DehnOptions plain{false, {}};
    for (long t : {6, 8, 10, 16}) {
        EdgeTuple T = tuple_of({t + 1, t - 1, t + 1, t - 1, t, 6});
        auto img = regge(T, 1);
        REQUIRE(img.has_value());
        auto as_int = to_integer(*img);
        REQUIRE(as_int.has_value());
        IntEdgeTuple orig = *to_integer(T);
        CHECK(dehn_invariant_is_zero(orig, plain).is_zero ==
              dehn_invariant_is_zero(*as_int, plain).is_zero);
        CHECK(angle_span_dimension(orig) == angle_span_dimension(*as_int));
    }
}

TEST_CASE("orbit closure") {
    // At t = 8 the complement transform lands on a relabeling of the input
    // (the vertex swap (1 2) sends the tuple to its pair-1 complement), so
    // the class orbit collapses to a point.
    EdgeTuple t8 = tuple_of({9, 7, 9, 7, 8, 6});
    EdgeTuple t8p = tuple_of({9, 7, 6, 8, 7, 9});
    CHECK(apply_s4(t8, perm(2, 1, 3, 4)) == t8p);
    CHECK(s4_canonical(*to_integer(t8)) == s4_canonical(*to_integer(t8p)));
    auto both8 = orbit(t8, OrbitOptions{OrbitGroup::Both, /*up_to_s4=*/true});
    REQUIRE(both8.size() == 1);
    CHECK(both8[0] == tuple_of({6, 8, 7, 9, 9, 7}));

    // Away from the collapse parameters the orbit has the two expected
    // classes.
    EdgeTuple t10 = tuple_of({11, 9, 11, 9, 10, 6});
    EdgeTuple t10p = tuple_of({11, 9, 7, 9, 8, 12});
    auto both = orbit(t10, OrbitOptions{OrbitGroup::Both, /*up_to_s4=*/true});
    REQUIRE(both.size() == 2);
    CHECK(both[0] == to_rational(s4_canonical(*to_integer(t10))));
    CHECK(both[1] == to_rational(s4_canonical(*to_integer(t10p))));

    // Relabelings alone give at most 24 raw tuples; a highly symmetric tuple
    // collapses to a point.
    auto s4_only = orbit(t8, OrbitOptions{OrbitGroup::S4, false});
    CHECK(s4_only.size() <= 24);
    EdgeTuple regular = tuple_of({1, 1, 1, 1, 1, 1});
    CHECK(orbit(regular, OrbitOptions{OrbitGroup::Both, false}).size() == 1);

    // The closure guard converts runaway enumeration into an error.
    CHECK_THROWS_AS(orbit(t8, OrbitOptions{OrbitGroup::Both, false, 3}), std::runtime_error);
}

TEST_CASE("opposite pair sums") {
    CHECK(opposite_sum_multiset(tuple_of({9, 7, 9, 7, 8, 6})) ==
          std::array<Rational, 3>{Rational(14), Rational(16), Rational(16)});
    CHECK(opposite_sum_multiset(tuple_of({9, 7, 6, 8, 7, 9})) ==
          std::array<Rational, 3>{Rational(14), Rational(16), Rational(16)});
    CHECK(opposite_sum_multiset(tuple_of({1, 1, 1, 1, 1, 1})) ==
          std::array<Rational, 3>{Rational(2), Rational(2), Rational(2)});
}
