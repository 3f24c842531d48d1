#pragma once

#include <random>

#include "tetrazero/geometry.hpp"

namespace tetrazero::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5EED1234u);
    return gen;
}

inline std::int64_t random_int(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(rng());
}

inline Rational random_rational(long max_num = 20, long max_den = 7) {
    long num = static_cast<long>(random_int(1, max_num));
    long den = static_cast<long>(random_int(1, max_den));
    return make_rational(num, den);
}

// Rejection-samples a nondegenerate integer tuple with entries in [1, max_edge].
inline IntEdgeTuple random_valid_tuple(std::int64_t max_edge = 20) {
    while (true) {
        IntEdgeTuple e;
        for (auto& v : e) v = random_int(1, max_edge);
        if (is_nondegenerate(to_rational(e))) return e;
    }
}

// Independent reference: the largest s with s^2 dividing n, by direct search
// over divisors (no factorization shared with the implementation).
inline long largest_square_divisor_root(long n) {
    long best = 1;
    for (long d = 1; d * d <= n; ++d)
        if (n % (d * d) == 0) best = d;
    return best;
}

}  // namespace tetrazero::testing
