#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tetrazero/quad_field.hpp"
#include "tetrazero/rational.hpp"
#include "tetrazero/real.hpp"
#include "tetrazero/sqrt_quantity.hpp"

namespace tetrazero {

// Six edge lengths, all strictly positive, in the fixed order
// (12, 34, 13, 24, 14, 23): opposite pairs sit next to each other.
using EdgeTuple = std::array<Rational, 6>;
using IntEdgeTuple = std::array<std::int64_t, 6>;

inline constexpr int kEdgeCount = 6;
// Vertex pair carried by each tuple position.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {
    {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}}};
inline constexpr std::array<int, 6> kOppositeEdge = {1, 0, 3, 2, 5, 4};
inline constexpr std::array<const char*, 6> kEdgeNames = {"12", "34", "13", "24", "14", "23"};

// Tuple position of edge {i, j}, vertices 1-based.
int edge_position(int i, int j);

EdgeTuple to_rational(const IntEdgeTuple& e);
std::optional<IntEdgeTuple> to_integer(const EdgeTuple& e);
bool all_positive(const EdgeTuple& e);

// Determinant and signed minors of the bordered squared-distance matrix.
//   det        = 288 V^2 for a realized tetrahedron
//   face_minor = 16 * (face area)^2, indexed by the omitted vertex (0-based);
//                positive for every honest triangle
//   edge_minor = the signed minor entering the dihedral cosine, EdgeTuple order
struct CayleyMengerData {
    Rational det;
    std::array<Rational, 4> face_minor;
    std::array<Rational, 6> edge_minor;
};

CayleyMengerData cayley_menger(const EdgeTuple& edges);

// Strict triangle inequality on all four faces and det > 0. The flat boundary
// (det = 0) counts as non-realizable.
bool is_nondegenerate(const EdgeTuple& edges);

// Exact dihedral cosines and sines per edge:
//   cos a_ij = edge_minor / sqrt(face_minor_k * face_minor_l)
//   sin a_ij = e_ij * sqrt(2 det) / sqrt(face_minor_k * face_minor_l)
// where k, l are the faces meeting along edge ij.
struct AngleData {
    std::array<SqrtQuantity, 6> cos;
    std::array<SqrtQuantity, 6> sin;

    // arccos of the exact cosine at the requested decimal precision.
    Real angle(int position, int digits) const;
    std::array<Real, 6> angles(int digits) const;
};

// Requires is_nondegenerate(edges); throws std::domain_error otherwise.
AngleData dihedral_trig(const EdgeTuple& edges);

// cos(2a) + i sin(2a) for the dihedral angle on the given edge, as an exact
// element of Q(sqrt(m)) with m the squarefree part of -2 det. Unit norm.
QuadFieldElement dihedral_rotation_squared(const EdgeTuple& edges, int position);
std::array<QuadFieldElement, 6> dihedral_rotations_squared(const EdgeTuple& edges);

// Variant over precomputed minors; the caller guarantees nondegeneracy.
std::array<QuadFieldElement, 6> dihedral_rotations_squared(const EdgeTuple& edges,
                                                           const CayleyMengerData& cm);

// Squarefree part m of -2 det (m < 0 for nondegenerate input).
Int rotation_field_radicand(const Rational& det);

// det / 288; nullopt when det < 0 (tuple not realizable).
std::optional<Rational> volume_squared(const EdgeTuple& edges);

namespace detail {
// Face minors of the three-edge face (x, y, z): 2x^2y^2 + 2y^2z^2 + 2z^2x^2 - x^4 - y^4 - z^4.
Rational triangle_minor(const Rational& x, const Rational& y, const Rational& z);
// The three edge positions bounding the face omitting the given vertex (0-based).
std::array<int, 3> face_edges(int omitted_vertex);
}  // namespace detail

}  // namespace tetrazero
