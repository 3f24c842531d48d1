#include "tetrazero/dehn.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetrazero/factor.hpp"
#include "tetrazero/padic.hpp"

namespace tetrazero {

namespace {

// Above this edge size the direct product is abandoned for the valuation
// route; coefficient growth is linear in the exponents.
constexpr std::int64_t kDirectProductMaxEdge = 256;

void require_valid(const IntEdgeTuple& edges) {
    for (auto e : edges)
        if (e <= 0) throw std::invalid_argument("edge lengths must be positive integers");
    if (!is_nondegenerate(to_rational(edges)))
        throw std::domain_error("edge tuple is not a nondegenerate tetrahedron");
}

std::vector<std::pair<QuadFieldElement, RootOfUnity>> unit_candidates(const Int& m) {
    std::vector<std::pair<QuadFieldElement, RootOfUnity>> out;
    out.emplace_back(QuadFieldElement(1, 0, 1, m), RootOfUnity{1, 0});
    out.emplace_back(QuadFieldElement(-1, 0, 1, m), RootOfUnity{2, 1});
    if (m == -1) {
        out.emplace_back(QuadFieldElement(0, 1, 1, m), RootOfUnity{4, 1});
        out.emplace_back(QuadFieldElement(0, -1, 1, m), RootOfUnity{4, 3});
    }
    if (m == -3) {
        out.emplace_back(QuadFieldElement(-1, 1, 2, m), RootOfUnity{3, 1});
        out.emplace_back(QuadFieldElement(-1, -1, 2, m), RootOfUnity{3, 2});
        out.emplace_back(QuadFieldElement(1, 1, 2, m), RootOfUnity{6, 1});
        out.emplace_back(QuadFieldElement(1, -1, 2, m), RootOfUnity{6, 5});
    }
    return out;
}

Int mod_inverse(const Int& a, const Int& p) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("mod_inverse: non-invertible");
    return inv;
}

Int reduce_mod(const QuadFieldElement& x, const Int& root, const Int& p) {
    Int num = (x.a() + x.b() * root) % p;
    Int val = num * mod_inverse(x.den() % p, p) % p;
    if (val < 0) val += p;
    return val;
}

// Rotation product mod p through the embedding sqrt(m) -> root. Requires p
// coprime to every denominator.
Int product_mod(const std::array<QuadFieldElement, 6>& rotations, const IntEdgeTuple& edges,
                const Int& root, const Int& p) {
    Int acc = 1;
    for (int i = 0; i < kEdgeCount; ++i) {
        Int base = reduce_mod(rotations[i], root, p);
        Int e(static_cast<long>(edges[i]));
        Int term;
        mpz_powm(term.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        acc = acc * term % p;
    }
    return acc;
}

Int sqrt_mod_via_branch(const Int& m, const Int& p) {
    return hensel_sqrt(m, p, 1).root;
}

DehnVerdict exact_by_product(const IntEdgeTuple& edges,
                             const std::array<QuadFieldElement, 6>& rotations) {
    DehnVerdict v;
    QuadFieldElement zeta = QuadFieldElement::one(rotations[0].m());
    for (int i = 0; i < kEdgeCount; ++i)
        zeta = zeta * rotations[i].pow(static_cast<unsigned long>(edges[i]));
    v.matched_root = classify_root_of_unity(zeta);
    v.is_zero = v.matched_root.has_value();
    v.product_squared = std::move(zeta);
    return v;
}

DehnVerdict exact_by_valuations(const IntEdgeTuple& edges,
                                const std::array<QuadFieldElement, 6>& rotations) {
    DehnVerdict v;
    const Int& m = rotations[0].m();

    // The product is a root of unity iff its valuation vanishes at every
    // prime; only split primes dividing a reduced denominator can contribute.
    for (const Int& p : detail::contributing_primes(rotations, /*include_two_adic=*/true)) {
        SplitPrimeBranch branch = hensel_sqrt(m, p, 8);
        long total = 0;
        for (int i = 0; i < kEdgeCount; ++i)
            total += static_cast<long>(edges[i]) * valuation_at(rotations[i], branch);
        if (total != 0) {
            v.is_zero = false;
            return v;
        }
    }

    // All valuations vanish, so the product is a unit of the ring of integers
    // of an imaginary quadratic field: one of at most six roots of unity.
    // Distinct candidates stay distinct mod any prime >= 5, so one modular
    // evaluation identifies the value exactly.
    Int p = 5;
    while (true) {
        bool usable = is_probable_prime(p) && legendre(m, p) == 1;
        for (int i = 0; usable && i < kEdgeCount; ++i)
            if (mpz_divisible_p(rotations[i].den().get_mpz_t(), p.get_mpz_t())) usable = false;
        if (usable) break;
        p += 2;
    }
    Int root = sqrt_mod_via_branch(m, p);
    Int zeta_mod = product_mod(rotations, edges, root, p);
    for (const auto& [value, root_id] : unit_candidates(m)) {
        if (reduce_mod(value, root, p) == zeta_mod) {
            v.is_zero = true;
            v.product_squared = value;
            v.matched_root = root_id;
            return v;
        }
    }
    throw std::logic_error("dehn: unit-group identification failed");
}

}  // namespace

QuadFieldElement dehn_product_squared(const IntEdgeTuple& edges) {
    require_valid(edges);
    auto rotations = dihedral_rotations_squared(to_rational(edges));
    QuadFieldElement acc = QuadFieldElement::one(rotations[0].m());
    for (int i = 0; i < kEdgeCount; ++i)
        acc = acc * rotations[i].pow(static_cast<unsigned long>(edges[i]));
    return acc;
}

std::optional<RootOfUnity> classify_root_of_unity(const QuadFieldElement& x) {
    for (const auto& [value, root] : unit_candidates(x.m()))
        if (x == value) return root;
    return std::nullopt;
}

namespace detail {

DehnVerdict exact_verdict(const IntEdgeTuple& edges,
                          const std::array<QuadFieldElement, 6>& rotations) {
    std::int64_t max_edge = *std::max_element(edges.begin(), edges.end());
    return (max_edge <= kDirectProductMaxEdge) ? exact_by_product(edges, rotations)
                                               : exact_by_valuations(edges, rotations);
}

FilterOutcome modp_filter_prepared(const std::array<QuadFieldElement, 6>& rotations,
                                   const std::array<Rational, 4>& face_minors,
                                   const IntEdgeTuple& edges, std::int64_t p) {
    Int prime(static_cast<long>(p));
    for (const auto& fm : face_minors)
        if (mpz_divisible_p(Int(fm.get_num()).get_mpz_t(), prime.get_mpz_t()))
            return FilterOutcome::PrimeUnusable;
    const Int& m = rotations[0].m();
    if (legendre(m, prime) != 1) return FilterOutcome::PrimeUnusable;

    Int zeta = product_mod(rotations, edges, sqrt_mod_via_branch(m, prime), prime);
    // Quadratic-field root-of-unity orders all divide 12.
    Int t;
    Int twelve(12);
    mpz_powm(t.get_mpz_t(), zeta.get_mpz_t(), twelve.get_mpz_t(), prime.get_mpz_t());
    return t == 1 ? FilterOutcome::Inconclusive : FilterOutcome::RejectedNotZero;
}

}  // namespace detail

FilterOutcome modp_filter(const IntEdgeTuple& edges, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(Int(static_cast<long>(p))))
        throw std::invalid_argument("modp_filter: need an odd prime");
    require_valid(edges);
    EdgeTuple rat = to_rational(edges);
    CayleyMengerData cm = cayley_menger(rat);
    return detail::modp_filter_prepared(dihedral_rotations_squared(rat, cm), cm.face_minor, edges, p);
}

DehnVerdict dehn_invariant_is_zero(const IntEdgeTuple& edges, const DehnOptions& opts) {
    require_valid(edges);
    EdgeTuple rat = to_rational(edges);
    CayleyMengerData cm = cayley_menger(rat);
    auto rotations = dihedral_rotations_squared(rat, cm);
    DehnVerdict v = detail::exact_verdict(edges, rotations);
    if (opts.record_filter_trace) {
        for (std::int64_t p : opts.filter_primes)
            v.filter_trace.emplace_back(p,
                                        detail::modp_filter_prepared(rotations, cm.face_minor, edges, p));
    }
    return v;
}

}  // namespace tetrazero
