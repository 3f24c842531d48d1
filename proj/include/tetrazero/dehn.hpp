#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tetrazero/geometry.hpp"
#include "tetrazero/quad_field.hpp"

namespace tetrazero {

// Roots of unity available in quadratic fields: orders 1 and 2 everywhere,
// 4 only in Q(sqrt(-1)), 3 and 6 only in Q(sqrt(-3)).
struct RootOfUnity {
    int order;  // one of {1, 2, 3, 4, 6}
    int power;  // exponent of exp(2*pi*i/order), reduced mod order
};

inline bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
    return x.order == y.order && x.power == y.power;
}

enum class FilterOutcome { RejectedNotZero, Inconclusive, PrimeUnusable };

struct DehnVerdict {
    bool is_zero = false;
    // Exact value of the edge-weighted rotation product when it was pinned
    // down (always for small exponents; for huge exponents only when the
    // verdict is zero, in which case the product is the matched root itself).
    std::optional<QuadFieldElement> product_squared;
    std::optional<RootOfUnity> matched_root;  // present iff is_zero
    std::vector<std::pair<std::int64_t, FilterOutcome>> filter_trace;
};

inline constexpr std::array<std::int64_t, 5> kDefaultFilterPrimes = {11, 13, 17, 19, 23};

struct DehnOptions {
    bool record_filter_trace = true;
    std::vector<std::int64_t> filter_primes =
        std::vector<std::int64_t>(kDefaultFilterPrimes.begin(), kDefaultFilterPrimes.end());
};

// Exact product over edges of (squared rotation)^(edge length), an element of
// Q(sqrt(m)) of unit norm. Cost grows with the edge sizes; fine for tuples
// with entries up to a few hundred.
QuadFieldElement dehn_product_squared(const IntEdgeTuple& edges);

// Identity of x as a root of unity, when it is one.
std::optional<RootOfUnity> classify_root_of_unity(const QuadFieldElement& x);

// One-way modular screen. Sound rejections only: a tuple whose rotation
// product is a root of unity always passes (root orders divide 12).
FilterOutcome modp_filter(const IntEdgeTuple& edges, std::int64_t p);

// Authoritative exact test: the Dehn invariant vanishes iff the rotation
// product is a root of unity. Decided by the direct product for small edges
// and by vanishing of all prime valuations (unit-group argument in the
// imaginary quadratic field) for large ones.
DehnVerdict dehn_invariant_is_zero(const IntEdgeTuple& edges, const DehnOptions& opts = {});

namespace detail {
// The exact verdict from precomputed rotations; no filter trace attached.
DehnVerdict exact_verdict(const IntEdgeTuple& edges,
                          const std::array<QuadFieldElement, 6>& rotations);
// Modular screen from precomputed data, avoiding repeated minor computations.
FilterOutcome modp_filter_prepared(const std::array<QuadFieldElement, 6>& rotations,
                                   const std::array<Rational, 4>& face_minors,
                                   const IntEdgeTuple& edges, std::int64_t p);
}  // namespace detail

}  // namespace tetrazero
