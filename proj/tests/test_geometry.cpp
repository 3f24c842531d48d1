#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "tetrazero/geometry.hpp"
#include "tetrazero/symmetry.hpp"

using namespace tetrazero;

namespace {

// Independent reference determinant: cofactor expansion along the first row
// (the library uses Gaussian elimination).
Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m[0][k]) == 0) continue;
        std::vector<std::vector<Rational>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Rational term = m[0][k] * cofactor_det(sub);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational reference_cm_det(const EdgeTuple& e) {
    std::vector<std::vector<Rational>> m(5, std::vector<Rational>(5, Rational(0)));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Rational sq = e[edge_position(i, j)] * e[edge_position(i, j)];
            m[i - 1][j - 1] = m[j - 1][i - 1] = sq;
        }
    for (int i = 0; i < 4; ++i) m[i][4] = m[4][i] = 1;
    return cofactor_det(m);
}

}  // namespace

TEST_CASE("determinant of the bordered matrix on known tuples") {
    EdgeTuple unit = to_rational(IntEdgeTuple{1, 1, 1, 1, 1, 1});
    CHECK(cayley_menger(unit).det == 4);

    EdgeTuple t5 = to_rational(IntEdgeTuple{6, 4, 6, 4, 5, 6});
    CHECK(cayley_menger(t5).det == 48600);

    // Equilateral unit face carries minor 3 on every face of the unit tuple.
    for (const auto& fm : cayley_menger(unit).face_minor) CHECK(fm == 3);
}

TEST_CASE("determinant matches the cofactor reference on random tuples") {
    for (int i = 0; i < 200; ++i) {
        IntEdgeTuple e;
        for (auto& v : e) v = testing::random_int(1, 12);
        EdgeTuple r = to_rational(e);
        CHECK(cayley_menger(r).det == reference_cm_det(r));
    }
}

TEST_CASE("face minors agree with the direct triangle expression") {
    for (int i = 0; i < 200; ++i) {
        IntEdgeTuple e;
        for (auto& v : e) v = testing::random_int(1, 12);
        EdgeTuple r = to_rational(e);
        CayleyMengerData cm = cayley_menger(r);
        for (int v = 0; v < 4; ++v) {
            auto f = detail::face_edges(v);
            CHECK(cm.face_minor[v] == detail::triangle_minor(r[f[0]], r[f[1]], r[f[2]]));
        }
    }
}

TEST_CASE("nondegeneracy verdicts") {
    CHECK_FALSE(is_nondegenerate(to_rational(IntEdgeTuple{1, 1, 3, 1, 1, 1})));
    CHECK(is_nondegenerate(to_rational(IntEdgeTuple{6, 4, 6, 4, 5, 6})));
    CHECK(is_nondegenerate(to_rational(IntEdgeTuple{11, 11, 12, 11, 13, 13})));
    // Planar rectangle configuration: faces fine, determinant zero.
    CHECK_FALSE(is_nondegenerate(to_rational(IntEdgeTuple{3, 3, 4, 4, 5, 5})));
}

TEST_CASE("dihedral cosines on catalogued tetrahedra") {
    AngleData unit = dihedral_trig(to_rational(IntEdgeTuple{1, 1, 1, 1, 1, 1}));
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        CHECK(unit.cos[pos].is_rational());
        CHECK(unit.cos[pos].coeff() == make_rational(1, 3));
    }

    AngleData t16 = dihedral_trig(to_rational(IntEdgeTuple{17, 15, 17, 15, 16, 6}));
    CHECK(t16.cos[0] == SqrtQuantity(make_rational(1, 42), 30));
    CHECK(t16.cos[1] == SqrtQuantity(make_rational(1, 42), 14));
    CHECK(t16.cos[3] == SqrtQuantity(make_rational(1, 42), 14));
    CHECK(t16.cos[4] == SqrtQuantity(make_rational(19, 21), 1));
}

TEST_CASE("squared rotations on catalogued tetrahedra") {
    auto t16 = dihedral_rotations_squared(to_rational(IntEdgeTuple{17, 15, 17, 15, 16, 6}));
    CHECK(t16[0] == QuadFieldElement(-142, 17, 147, -5));
    CHECK(t16[1] == QuadFieldElement(-62, 5, 63, -5));

    auto unit = dihedral_rotations_squared(to_rational(IntEdgeTuple{1, 1, 1, 1, 1, 1}));
    for (const auto& z : unit) CHECK(z == QuadFieldElement(-7, 4, 9, -2));
}

TEST_CASE("volume") {
    CHECK(*volume_squared(to_rational(IntEdgeTuple{1, 1, 1, 1, 1, 1})) == make_rational(1, 72));
    CHECK(*volume_squared(to_rational(IntEdgeTuple{6, 4, 6, 4, 5, 6})) == make_rational(675, 4));
    CHECK(*volume_squared(to_rational(IntEdgeTuple{3, 3, 4, 4, 5, 5})) == 0);
}

TEST_CASE("pythagorean identity holds exactly per edge, randomized") {
    for (int i = 0; i < 1000; ++i) {
        IntEdgeTuple e = testing::random_valid_tuple(15);
        AngleData trig = dihedral_trig(to_rational(e));
        for (int pos = 0; pos < kEdgeCount; ++pos) {
            CHECK(trig.cos[pos].squared() + trig.sin[pos].squared() == 1);
            CHECK(trig.sin[pos].sign() == 1);
        }
    }
}

TEST_CASE("squared rotations have unit norm, randomized") {
    for (int i = 0; i < 1000; ++i) {
        IntEdgeTuple e = testing::random_valid_tuple(15);
        for (const auto& z : dihedral_rotations_squared(to_rational(e))) CHECK(z.norm() == 1);
    }
}

TEST_CASE("determinant and face minors are relabeling-invariant") {
    for (int i = 0; i < 200; ++i) {
        IntEdgeTuple e = testing::random_valid_tuple(15);
        EdgeTuple r = to_rational(e);
        CayleyMengerData base = cayley_menger(r);
        std::array<Rational, 4> base_faces = base.face_minor;
        std::sort(base_faces.begin(), base_faces.end());
        const auto& perms = all_vertex_permutations();
        const VertexPermutation& g = perms[testing::random_int(0, 23)];
        CayleyMengerData img = cayley_menger(apply_s4(r, g));
        CHECK(img.det == base.det);
        std::array<Rational, 4> img_faces = img.face_minor;
        std::sort(img_faces.begin(), img_faces.end());
        CHECK(img_faces == base_faces);
    }
}

namespace {

struct Vec3 {
    Real x, y, z;
};

Real dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// Embeds the tetrahedron explicitly and measures each dihedral angle from
// face normals; entirely independent of the minor-based formulas.
std::array<Real, 6> embedded_angles(const IntEdgeTuple& e, mpfr_prec_t bits) {
    auto d = [&](int i, int j) { return Real::from((long)e[edge_position(i, j)], bits); };
    auto sq = [](const Real& v) { return v * v; };
    Real zero = Real::from(0L, bits);

    Vec3 v1{zero, zero, zero};
    Vec3 v2{d(1, 2), zero, zero};
    Real x3 = (sq(d(1, 2)) + sq(d(1, 3)) - sq(d(2, 3))) / (Real::from(2L, bits) * d(1, 2));
    Vec3 v3{x3, sqrt(sq(d(1, 3)) - sq(x3)), zero};
    Real x4 = (sq(d(1, 2)) + sq(d(1, 4)) - sq(d(2, 4))) / (Real::from(2L, bits) * d(1, 2));
    Real y4 = (sq(d(1, 4)) - sq(d(3, 4)) + sq(x3) + sq(v3.y) - Real::from(2L, bits) * x4 * x3) /
              (Real::from(2L, bits) * v3.y);
    Vec3 v4{x4, y4, sqrt(sq(d(1, 4)) - sq(x4) - sq(y4))};

    std::array<Vec3, 4> verts = {v1, v2, v3, v4};
    std::array<Real, 6> out = {zero, zero, zero, zero, zero, zero};
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        int i = kEdgeVertices[pos][0] - 1, j = kEdgeVertices[pos][1] - 1;
        int k = kEdgeVertices[kOppositeEdge[pos]][0] - 1;
        int l = kEdgeVertices[kOppositeEdge[pos]][1] - 1;
        Vec3 u = sub(verts[j], verts[i]);
        Vec3 n1 = cross(u, sub(verts[k], verts[i]));
        Vec3 n2 = cross(u, sub(verts[l], verts[i]));
        Real c = dot(n1, n2) / (sqrt(dot(n1, n1)) * sqrt(dot(n2, n2)));
        out[pos] = acos(c);
    }
    return out;
}

}  // namespace

TEST_CASE("exact angles match a coordinate embedding to 30 digits") {
    mpfr_prec_t bits = Real::digits_to_bits(60);
    Real tol = Real::from(make_rational(1, 1), bits);
    for (int i = 0; i < 30; ++i) tol = tol / Real::from(10L, bits);

    for (int iter = 0; iter < 50; ++iter) {
        IntEdgeTuple e = testing::random_valid_tuple(30);
        AngleData trig = dihedral_trig(to_rational(e));
        std::array<Real, 6> reference = embedded_angles(e, bits);
        for (int pos = 0; pos < kEdgeCount; ++pos) {
            Real diff = (trig.angle(pos, 60) - reference[pos]).abs();
            CHECK(diff < tol);
        }
    }
}

TEST_CASE("degenerate input is rejected") {
    CHECK_THROWS_AS(dihedral_trig(to_rational(IntEdgeTuple{1, 1, 3, 1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(dihedral_rotation_squared(to_rational(IntEdgeTuple{3, 3, 4, 4, 5, 5}), 0),
                    std::domain_error);
}
