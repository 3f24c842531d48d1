#include "tetrazero/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tetrazero {

const std::array<VertexPermutation, 24>& all_vertex_permutations() {
    static const std::array<VertexPermutation, 24> perms = [] {
        std::array<VertexPermutation, 24> out{};
        std::array<int, 4> v = {1, 2, 3, 4};
        int i = 0;
        do {
            out[i++].image = v;
        } while (std::next_permutation(v.begin(), v.end()));
        return out;
    }();
    return perms;
}

const std::array<std::array<int, 6>, 24>& s4_edge_maps() {
    static const std::array<std::array<int, 6>, 24> maps = [] {
        std::array<std::array<int, 6>, 24> out{};
        const auto& perms = all_vertex_permutations();
        for (int g = 0; g < 24; ++g) {
            for (int pos = 0; pos < kEdgeCount; ++pos) {
                int i = kEdgeVertices[pos][0], j = kEdgeVertices[pos][1];
                out[g][pos] = edge_position(perms[g].image[i - 1], perms[g].image[j - 1]);
            }
        }
        return out;
    }();
    return maps;
}

namespace {

int index_of(const VertexPermutation& g) {
    const auto& perms = all_vertex_permutations();
    for (int i = 0; i < 24; ++i)
        if (perms[i].image == g.image) return i;
    throw std::invalid_argument("apply_s4: not a permutation of {1,2,3,4}");
}

template <typename Tuple>
Tuple permute(const Tuple& edges, const std::array<int, 6>& map) {
    Tuple out;
    for (int pos = 0; pos < kEdgeCount; ++pos) out[pos] = edges[map[pos]];
    return out;
}

template <typename Tuple>
Tuple canonical_of(const Tuple& edges) {
    Tuple best = edges;
    for (const auto& map : s4_edge_maps()) {
        Tuple img = permute(edges, map);
        if (img < best) best = img;
    }
    return best;
}

}  // namespace

EdgeTuple apply_s4(const EdgeTuple& edges, const VertexPermutation& g) {
    return permute(edges, s4_edge_maps()[index_of(g)]);
}

IntEdgeTuple apply_s4(const IntEdgeTuple& edges, const VertexPermutation& g) {
    return permute(edges, s4_edge_maps()[index_of(g)]);
}

EdgeTuple s4_canonical(const EdgeTuple& edges) { return canonical_of(edges); }
IntEdgeTuple s4_canonical(const IntEdgeTuple& edges) { return canonical_of(edges); }

std::optional<EdgeTuple> regge(const EdgeTuple& edges, int fixed_pair) {
    if (fixed_pair < 1 || fixed_pair > 3) throw std::invalid_argument("regge: pair index must be 1..3");
    int keep0 = 2 * (fixed_pair - 1), keep1 = keep0 + 1;
    Rational s = 0;
    for (int pos = 0; pos < kEdgeCount; ++pos)
        if (pos != keep0 && pos != keep1) s += edges[pos];
    s /= 2;
    EdgeTuple out = edges;
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        if (pos == keep0 || pos == keep1) continue;
        out[pos] = s - edges[pos];
        if (sgn(out[pos]) <= 0) return std::nullopt;
    }
    return out;
}

std::array<Real, 6> regge_angles(const std::array<Real, 6>& angles, int fixed_pair) {
    if (fixed_pair < 1 || fixed_pair > 3) throw std::invalid_argument("regge_angles: pair index must be 1..3");
    int keep0 = 2 * (fixed_pair - 1), keep1 = keep0 + 1;
    Real sigma(angles[0].prec());
    bool first = true;
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        if (pos == keep0 || pos == keep1) continue;
        sigma = first ? angles[pos] : sigma + angles[pos];
        first = false;
    }
    sigma = sigma / Real::from(2L, angles[0].prec());
    std::array<Real, 6> out = angles;
    for (int pos = 0; pos < kEdgeCount; ++pos) {
        if (pos == keep0 || pos == keep1) continue;
        out[pos] = sigma - angles[pos];
    }
    return out;
}

std::vector<EdgeTuple> orbit(const EdgeTuple& edges, const OrbitOptions& opts) {
    const bool use_s4 = opts.group != OrbitGroup::Regge;
    const bool use_regge = opts.group != OrbitGroup::S4;
    std::set<EdgeTuple> seen;
    std::vector<EdgeTuple> frontier = {edges};
    seen.insert(edges);
    while (!frontier.empty()) {
        std::vector<EdgeTuple> next;
        for (const EdgeTuple& cur : frontier) {
            if (use_s4) {
                for (const auto& map : s4_edge_maps()) {
                    EdgeTuple img;
                    for (int pos = 0; pos < kEdgeCount; ++pos) img[pos] = cur[map[pos]];
                    if (seen.insert(img).second) next.push_back(std::move(img));
                }
            }
            if (use_regge) {
                for (int pair = 1; pair <= 3; ++pair) {
                    auto img = regge(cur, pair);
                    if (img && seen.insert(*img).second) next.push_back(std::move(*img));
                }
            }
            if (seen.size() > opts.guard) throw std::runtime_error("orbit: closure guard exceeded");
        }
        frontier = std::move(next);
    }
    std::vector<EdgeTuple> out;
    if (opts.up_to_s4) {
        std::set<EdgeTuple> reps;
        for (const EdgeTuple& t : seen) reps.insert(s4_canonical(t));
        out.assign(reps.begin(), reps.end());
    } else {
        out.assign(seen.begin(), seen.end());
    }
    return out;
}

std::array<Rational, 3> opposite_sum_multiset(const EdgeTuple& edges) {
    std::array<Rational, 3> sums = {edges[0] + edges[1], edges[2] + edges[3], edges[4] + edges[5]};
    std::sort(sums.begin(), sums.end());
    return sums;
}

}  // namespace tetrazero
