#pragma once

#include <vector>

#include "tetrazero/rational.hpp"

namespace tetrazero {

// Exact determinant of a square rational matrix (Gaussian elimination).
Rational determinant(std::vector<std::vector<Rational>> m);

// Rank over Q of an integer matrix, by fraction-free Gaussian elimination.
int rank_over_q(std::vector<std::vector<Int>> m);

}  // namespace tetrazero
