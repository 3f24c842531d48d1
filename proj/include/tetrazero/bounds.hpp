#pragma once

#include <cstdint>
#include <vector>

#include "tetrazero/rational.hpp"
#include "tetrazero/real.hpp"
#include "tetrazero/sqrt_quantity.hpp"

namespace tetrazero {

// The edge-length bound for Dehn-zero tetrahedra whose angle span has
// dimension five: the fixed point of N = C * ln(9 N^8)^5 with
// C = 32 / (ln 2 * ln 3 * ln 5 * ln 7 * ln 11), about 3.946e12.
struct BoundReport {
    Real constant;                // C
    Real fixed_point;             // N* solving the equation
    Int certified_integer_bound;  // largest integer N with N <= C * ln(9 N^8)^5
    int precision_digits;
};

BoundReport case5_bound(int precision_digits = 30);

// Hadamard determinant bounds for a square rational matrix:
//   |det| <= (sqrt(n) * max|entry|)^n   (exact, a radical quantity for odd n)
//   |det| <= product of row l1-norms    (exact rational)
struct HadamardBounds {
    SqrtQuantity entrywise;
    Rational row_norm_product;
};

HadamardBounds hadamard_bound(const std::vector<std::vector<Rational>>& matrix);

// Samples integer tuples with entries in [1, max_edge] and asserts
// |face minor| <= 3 * max_edge^4 on every face. Sweeps exhaustively when the
// space is smaller than the sample budget.
bool minor_bound_check(std::int64_t max_edge, long samples, unsigned long seed = 20240601);

}  // namespace tetrazero
