#include "tetrazero/geometry.hpp"

#include <stdexcept>
#include <vector>

#include "tetrazero/factor.hpp"
#include "tetrazero/linalg.hpp"

namespace tetrazero {

namespace detail {

Rational triangle_minor(const Rational& x, const Rational& y, const Rational& z) {
    Rational x2 = x * x, y2 = y * y, z2 = z * z;
    return 2 * (x2 * y2 + y2 * z2 + z2 * x2) - x2 * x2 - y2 * y2 - z2 * z2;
}

std::array<int, 3> face_edges(int omitted_vertex) {
    switch (omitted_vertex) {
        case 0: return {5, 3, 1};  // vertices {2,3,4}: edges 23, 24, 34
        case 1: return {2, 4, 1};  // vertices {1,3,4}: edges 13, 14, 34
        case 2: return {0, 3, 4};  // vertices {1,2,4}: edges 12, 24, 14
        case 3: return {0, 2, 5};  // vertices {1,2,3}: edges 12, 13, 23
        default: throw std::invalid_argument("face_edges: vertex out of range");
    }
}

}  // namespace detail

int edge_position(int i, int j) {
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        if ((kEdgeVertices[pos][0] == i && kEdgeVertices[pos][1] == j) ||
            (kEdgeVertices[pos][0] == j && kEdgeVertices[pos][1] == i))
            return pos;
    }
    throw std::invalid_argument("edge_position: bad vertex pair");
}

EdgeTuple to_rational(const IntEdgeTuple& e) {
    EdgeTuple r;
    for (int i = 0; i < kEdgeCount; ++i) r[i] = Rational(static_cast<long>(e[i]));
    return r;
}

std::optional<IntEdgeTuple> to_integer(const EdgeTuple& e) {
    IntEdgeTuple r;
    for (int i = 0; i < kEdgeCount; ++i) {
        if (!is_integer(e[i]) || !e[i].get_num().fits_slong_p()) return std::nullopt;
        r[i] = static_cast<std::int64_t>(e[i].get_num().get_si());
    }
    return r;
}

bool all_positive(const EdgeTuple& e) {
    for (const auto& x : e)
        if (sgn(x) <= 0) return false;
    return true;
}

namespace {

// Bordered squared-distance matrix: rows/cols 0..3 are vertices, row/col 4 the
// all-ones border.
std::vector<std::vector<Rational>> bordered_matrix(const EdgeTuple& edges) {
    std::vector<std::vector<Rational>> m(5, std::vector<Rational>(5, Rational(0)));
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            const Rational& e = edges[edge_position(i, j)];
            m[i - 1][j - 1] = m[j - 1][i - 1] = e * e;
        }
    }
    for (int i = 0; i < 4; ++i) m[i][4] = m[4][i] = 1;
    return m;
}

std::vector<std::vector<Rational>> drop_row_col(const std::vector<std::vector<Rational>>& m,
                                                std::size_t row, std::size_t col) {
    std::vector<std::vector<Rational>> out;
    out.reserve(m.size() - 1);
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == row) continue;
        std::vector<Rational> line;
        line.reserve(m.size() - 1);
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c == col) continue;
            line.push_back(m[r][c]);
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace

CayleyMengerData cayley_menger(const EdgeTuple& edges) {
    auto m = bordered_matrix(edges);
    CayleyMengerData data;
    data.det = determinant(m);
    // The raw principal minor of the bordered matrix is -16 * (face area)^2;
    // negate so face minors are positive exactly for honest triangles. Pinned
    // by the unit equilateral face, whose minor must come out as 3.
    for (int v = 0; v < 4; ++v) data.face_minor[v] = -determinant(drop_row_col(m, v, v));
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        int k = kEdgeVertices[kOppositeEdge[pos]][0];
        int l = kEdgeVertices[kOppositeEdge[pos]][1];
        Rational minor = determinant(drop_row_col(m, k - 1, l - 1));
        data.edge_minor[pos] = ((k + l) % 2 == 0) ? minor : -minor;
    }
    return data;
}

bool is_nondegenerate(const EdgeTuple& edges) {
    if (!all_positive(edges)) return false;
    for (int v = 0; v < 4; ++v) {
        auto f = detail::face_edges(v);
        const Rational &x = edges[f[0]], &y = edges[f[1]], &z = edges[f[2]];
        if (x + y <= z || y + z <= x || z + x <= y) return false;
    }
    return cayley_menger(edges).det > 0;
}

namespace {

void require_nondegenerate(const EdgeTuple& edges) {
    if (!is_nondegenerate(edges)) throw std::domain_error("edge tuple is not a nondegenerate tetrahedron");
}

SqrtQuantity inverse_sqrt(const Rational& p) {
    // 1/sqrt(p) = sqrt(p)/p for p > 0.
    SqrtQuantity s = SqrtQuantity::sqrt_of(p);
    return SqrtQuantity(s.coeff() / p, s.radicand());
}

}  // namespace

Real AngleData::angle(int position, int digits) const {
    mpfr_prec_t bits = Real::digits_to_bits(digits) + 32;
    Real c = Real::from(cos[position].coeff(), bits) * sqrt(Real::from(cos[position].radicand(), bits));
    if (c > Real::from(1L, bits)) c = Real::from(1L, bits);
    if (c < -Real::from(1L, bits)) c = -Real::from(1L, bits);
    return acos(c);
}

std::array<Real, 6> AngleData::angles(int digits) const {
    return {angle(0, digits), angle(1, digits), angle(2, digits),
            angle(3, digits), angle(4, digits), angle(5, digits)};
}

AngleData dihedral_trig(const EdgeTuple& edges) {
    require_nondegenerate(edges);
    CayleyMengerData cm = cayley_menger(edges);
    AngleData out;
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        int k = kEdgeVertices[kOppositeEdge[pos]][0];
        int l = kEdgeVertices[kOppositeEdge[pos]][1];
        Rational face_product = cm.face_minor[k - 1] * cm.face_minor[l - 1];
        SqrtQuantity inv = inverse_sqrt(face_product);
        out.cos[pos] = cm.edge_minor[pos] * inv;
        out.sin[pos] = edges[pos] * (SqrtQuantity::sqrt_of(2 * cm.det) * inv);
    }
    return out;
}

Int rotation_field_radicand(const Rational& det) {
    Rational x = -2 * det;
    if (sgn(x) >= 0) throw std::domain_error("rotation field needs det > 0");
    Int n = Int(x.get_num()) * Int(x.get_den());  // negative
    auto parts = squarefree_decompose(-n);
    return -parts.squarefree;
}

namespace {

QuadFieldElement rotation_squared_from(const CayleyMengerData& cm, const EdgeTuple& edges,
                                       int pos, const Int& m) {
    int k = kEdgeVertices[kOppositeEdge[pos]][0];
    int l = kEdgeVertices[kOppositeEdge[pos]][1];
    Rational face_product = cm.face_minor[k - 1] * cm.face_minor[l - 1];
    const Rational& em = cm.edge_minor[pos];
    Rational rational_part = (2 * em * em - face_product) / face_product;

    // sqrt(-2 det) = (s / den) * sqrt(m) with s^2 * |m| = |num * den|.
    Rational neg2d = -2 * cm.det;
    Int num_den = Int(neg2d.get_num()) * Int(neg2d.get_den());
    auto parts = squarefree_decompose(-num_den);
    Rational radical_scale = make_rational(parts.square_root, Int(neg2d.get_den()));
    Rational radical_coeff = 2 * edges[pos] * em / face_product * radical_scale;

    return QuadFieldElement::from_parts(rational_part, radical_coeff, m);
}

}  // namespace

QuadFieldElement dihedral_rotation_squared(const EdgeTuple& edges, int position) {
    require_nondegenerate(edges);
    CayleyMengerData cm = cayley_menger(edges);
    return rotation_squared_from(cm, edges, position, rotation_field_radicand(cm.det));
}

std::array<QuadFieldElement, 6> dihedral_rotations_squared(const EdgeTuple& edges) {
    require_nondegenerate(edges);
    return dihedral_rotations_squared(edges, cayley_menger(edges));
}

std::array<QuadFieldElement, 6> dihedral_rotations_squared(const EdgeTuple& edges,
                                                           const CayleyMengerData& cm) {
    Int m = rotation_field_radicand(cm.det);
    return {rotation_squared_from(cm, edges, 0, m), rotation_squared_from(cm, edges, 1, m),
            rotation_squared_from(cm, edges, 2, m), rotation_squared_from(cm, edges, 3, m),
            rotation_squared_from(cm, edges, 4, m), rotation_squared_from(cm, edges, 5, m)};
}

std::optional<Rational> volume_squared(const EdgeTuple& edges) {
    Rational det = cayley_menger(edges).det;
    if (sgn(det) < 0) return std::nullopt;
    return det / 288;
}

}  // namespace tetrazero
