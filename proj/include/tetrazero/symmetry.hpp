#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tetrazero/geometry.hpp"
#include "tetrazero/real.hpp"

namespace tetrazero {

// A vertex relabeling, stored as the image of each vertex (1-based).
struct VertexPermutation {
    std::array<int, 4> image;
};

const std::array<VertexPermutation, 24>& all_vertex_permutations();

// Position maps induced on the six tuple slots: relabeled[pos] = edges[map[pos]].
const std::array<std::array<int, 6>, 24>& s4_edge_maps();

EdgeTuple apply_s4(const EdgeTuple& edges, const VertexPermutation& g);
IntEdgeTuple apply_s4(const IntEdgeTuple& edges, const VertexPermutation& g);

// Lexicographically smallest tuple over the 24 relabelings.
EdgeTuple s4_canonical(const EdgeTuple& edges);
IntEdgeTuple s4_canonical(const IntEdgeTuple& edges);

// Regge transform fixing the given opposite pair (1, 2 or 3): the fixed pair
// is untouched and the other four lengths are replaced by their semiperimeter
// complements. nullopt when a resulting length would not be positive.
std::optional<EdgeTuple> regge(const EdgeTuple& edges, int fixed_pair);

// The companion transform on dihedral angles.
std::array<Real, 6> regge_angles(const std::array<Real, 6>& angles, int fixed_pair);

enum class OrbitGroup { S4, Regge, Both };

struct OrbitOptions {
    OrbitGroup group = OrbitGroup::Both;
    bool up_to_s4 = false;       // report canonical representatives
    std::size_t guard = 100000;  // closure is finite; the guard turns a logic error into a failure
};

// Closure of the tuple under the selected generators, exact arithmetic,
// sorted. Regge moves that would produce non-positive lengths are skipped.
std::vector<EdgeTuple> orbit(const EdgeTuple& edges, const OrbitOptions& opts);

// {e12+e34, e13+e24, e14+e23} as a sorted multiset; a Regge invariant.
std::array<Rational, 3> opposite_sum_multiset(const EdgeTuple& edges);

}  // namespace tetrazero
