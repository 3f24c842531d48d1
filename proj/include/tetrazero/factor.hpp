#pragma once

#include <utility>
#include <vector>

#include "tetrazero/rational.hpp"

namespace tetrazero {

// Complete factorization with primes strictly increasing. factor(1) = {}.
using PrimeFactorization = std::vector<std::pair<Int, unsigned>>;

bool is_probable_prime(const Int& n);

// Trial division below 10^6, Pollard rho (Brent) above. Requires n >= 1.
PrimeFactorization factor(const Int& n);

// n = square_root^2 * squarefree with squarefree squarefree. Requires n >= 1.
struct SquarefreeParts {
    Int square_root;
    Int squarefree;
};
SquarefreeParts squarefree_decompose(const Int& n);

// Multiplicity of p in n. Requires n != 0, p >= 2.
long p_adic_valuation(const Int& n, const Int& p);

}  // namespace tetrazero
