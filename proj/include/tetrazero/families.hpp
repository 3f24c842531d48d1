#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetrazero/geometry.hpp"
#include "tetrazero/real.hpp"

namespace tetrazero {

enum class FamilyTag { H1, H2, H3, NewT, NewTPrime };

const char* family_name(FamilyTag tag);

struct FamilyInstance {
    FamilyTag tag;
    Rational parameter;   // the rational parameter that produced the instance
    EdgeTuple edges;      // exact template values
    Int scale;            // least positive multiplier clearing denominators
    IntEdgeTuple scaled;  // scale * edges, an integer tetrahedron
};

// The two one-parameter families
//   T(t)  = (t+1, t-1, t+1, t-1, t, 6)
//   T'(t) = (t+1, t-1, t/2+2, t/2+4, t/2+3, 3t/2-3)
// nondegenerate exactly for t > 4; smaller t is rejected.
EdgeTuple new_family(const Rational& t, bool t_prime);

// Instance of the family with edge template (sin a, sin a, sqrt(3) cos a, sin a, 1, 1),
// via the rational parametrization (sin a, sqrt(3) cos a) = ((3-t^2)/(3+t^2), 6t/(3+t^2)).
// Absent when the resulting tuple is degenerate or has a non-positive entry.
std::optional<FamilyInstance> h1_instance(const Rational& t);

struct FamilySearchResult {
    std::string curve;  // the rationality condition behind the search
    std::vector<FamilyInstance> instances;
};

// Brute-force searches for integer instances of the templates
//   (2 sin a, f, sqrt(3) cos a, 2 sin a, 2, f),        f = sqrt(5 sin^2 a - 1)
//   (2 sin a, r, sqrt(12) cos a, sin a, r, 2),         r = sqrt(sin^2 a + 2)
// over sin a = p/q with q up to the given bound. Only nondegenerate instances
// are returned, deduplicated by congruence class.
FamilySearchResult h2_search(long max_denominator);
FamilySearchResult h3_search(long max_denominator);

struct NewFamilyRelations {
    bool holds = false;                // both angle relations verified
    bool cos_double_identity = false;  // cos(2a12 + 2a24) matches a single edge cosine exactly
    bool cos_triple_identity = false;  // cos(3a) = -cos(a12 - a24) exactly on the length-6 edge
    bool indices_as_stated = false;    // the 2*pi relation lands on edge 14, the pi relation on edge 23
};

// Exact verification that the angles of T(t) satisfy
//   2 a12 + 2 a24 + a14 = 2 pi   and   a12 - a24 + 3 a23 = pi.
// The cosine identities are checked in exact radical arithmetic; the angle
// relations themselves are then certified by adaptive-precision enclosures.
NewFamilyRelations verify_new_family_relations(const Rational& t);

// Upper bound on |sum of e_ij a_ij / pi - 2(t+1)| at the given decimal
// precision; the identity makes it vanish, so this is a numeric residual.
Real dehn_sum_certificate(const Rational& t, int digits = 50);

// scale * edges as an integer tuple. Throws when an entry is out of range.
FamilyInstance make_instance(FamilyTag tag, const Rational& parameter, const EdgeTuple& edges);

}  // namespace tetrazero
