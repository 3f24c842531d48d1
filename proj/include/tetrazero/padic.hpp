#pragma once

#include <vector>

#include "tetrazero/factor.hpp"
#include "tetrazero/geometry.hpp"
#include "tetrazero/quad_field.hpp"
#include "tetrazero/rational.hpp"

namespace tetrazero {

enum class SplittingType { Split, Inert, Ramified };

// Legendre symbol (a | p) for odd prime p.
int legendre(const Int& a, const Int& p);

// Behavior of the odd prime p in Q(sqrt(m)), m squarefree:
// Ramified iff p | m, Split iff m is a nonzero residue mod p, else Inert.
SplittingType splitting_type(const Int& p, const Int& m);

// One of the two embeddings Q(sqrt(m)) -> Q_p, represented by a square root of
// m to precision p^k. The conjugate branch carries p^k - root.
struct SplitPrimeBranch {
    Int p;
    Int m;
    Int root;            // root^2 = m (mod p^precision)
    unsigned precision;  // k
};

// Branch through the smaller base residue (the default choice everywhere).
// Requires that m be a square mod p: p odd with (m | p) = 1, or p = 2 with
// m = 1 (mod 8).
SplitPrimeBranch hensel_sqrt(const Int& m, const Int& p, unsigned precision);

// Branch through a chosen base residue (mod p for odd p, mod 8 for p = 2).
SplitPrimeBranch hensel_sqrt_through(const Int& m, const Int& p, unsigned precision,
                                     const Int& base_residue);

SplitPrimeBranch extend_precision(const SplitPrimeBranch& b, unsigned precision);
SplitPrimeBranch conjugate_branch(const SplitPrimeBranch& b);

// Valuation of x at the prime selected by the branch:
//   v(x) = v_p(a + b * root mod p^k) - v_p(den),
// with the precision raised internally whenever k is too small to resolve it.
long valuation_at(const QuadFieldElement& x, const SplitPrimeBranch& branch);

// Rows indexed by split-prime branches, columns by the six edges in tuple
// order; entry (i, j) is the valuation of the j-th squared dihedral rotation.
// Switching a row to the conjugate branch negates it (the rotations have unit
// norm).
struct ValuationMatrix {
    std::vector<SplitPrimeBranch> branches;
    std::vector<std::array<long, 6>> rows;
};

// One row per split prime that can carry a nonzero valuation (primes dividing
// a reduced rotation denominator), default branch, ordered by prime. All-zero
// rows are retained. include_two_adic controls whether a split prime 2
// (m = 1 mod 8) contributes a row; the display default leaves it out.
ValuationMatrix valuation_matrix(const IntEdgeTuple& edges, bool include_two_adic = false);

// Dimension over Q of the span of the six dihedral angles modulo rational
// multiples of pi: the rank of the valuation matrix. Computed over every
// contributing prime, including one above 2 when it splits.
int angle_span_dimension(const IntEdgeTuple& edges);

namespace detail {
// Split primes (optionally including 2) dividing any reduced denominator of
// the six squared rotations; sorted ascending.
std::vector<Int> contributing_primes(const std::array<QuadFieldElement, 6>& rotations,
                                     bool include_two_adic);
}  // namespace detail

}  // namespace tetrazero
