#include "tetrazero/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tetrazero {

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Brent's cycle variant of Pollard rho. n must be odd, composite, not a prime power
// handled elsewhere; returns a nontrivial factor.
Int pollard_rho_brent(const Int& n) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, ys = y, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // Batch overshot; replay one step at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

PrimeFactorization factor(const Int& n) {
    if (n < 1) throw std::invalid_argument("factor: argument must be positive");
    PrimeFactorization result;
    Int rest = n;
    for (unsigned long p = 2; p <= kTrialBound && rest > 1; p = (p == 2) ? 3 : p + 2) {
        if (Int(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            result.emplace_back(Int(p), e);
        }
    }
    if (rest > 1) {
        std::map<Int, unsigned> tail;
        factor_into(rest, tail);
        for (auto& [p, e] : tail) result.emplace_back(p, e);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

SquarefreeParts squarefree_decompose(const Int& n) {
    if (n < 1) throw std::invalid_argument("squarefree_decompose: argument must be positive");
    SquarefreeParts parts{1, 1};
    for (const auto& [p, e] : factor(n)) {
        if (e / 2 > 0) parts.square_root *= pow_int(p, e / 2);
        if (e % 2) parts.squarefree *= p;
    }
    return parts;
}

long p_adic_valuation(const Int& n, const Int& p) {
    if (sgn(n) == 0) throw std::invalid_argument("p_adic_valuation: zero argument");
    Int rest = abs(n);
    long v = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++v;
    }
    return v;
}

}  // namespace tetrazero
