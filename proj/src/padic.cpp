#include "tetrazero/padic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tetrazero/linalg.hpp"

namespace tetrazero {

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

SplittingType splitting_type(const Int& p, const Int& m) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return SplittingType::Ramified;
    return legendre(m, p) == 1 ? SplittingType::Split : SplittingType::Inert;
}

namespace {

// Tonelli-Shanks square root of a mod odd prime p; requires (a | p) = 1.
Int sqrt_mod_prime(const Int& a, const Int& p) {
    Int n = a % p;
    if (n < 0) n += p;
    if (n == 0) return 0;
    if (p % 4 == 3) {
        Int r;
        Int e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    // Write p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int c, t, r, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long level = s;
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        b = c;
        for (unsigned long j = 0; j + i + 1 < level; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        level = i;
    }
    return r;
}

// One lifting step from precision k to k+1, keeping root^2 = m (mod p^(k+1)).
// For p = 2 the step preserves the root mod 2^(k-1), so for k >= 4 it stays on
// one fixed 2-adic branch.
Int lift_step(const Int& r, const Int& m, const Int& p, const Int& pk) {
    if (p == 2) {
        Int q = (r * r - m) / pk;
        if (mpz_even_p(q.get_mpz_t())) return r;
        return r + pk / 2;
    }
    Int num = (m - r * r) / pk;
    Int two_r = 2 * r % p;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("hensel: non-invertible derivative");
    Int d = num * inv % p;
    if (d < 0) d += p;
    return r + d * pk;
}

SplitPrimeBranch lift_to(const Int& m, const Int& p, unsigned precision, Int r, unsigned have) {
    // For p = 2 a solution mod 2^k is only a true truncation of the 2-adic
    // root below its top digit, so lift one step past the target and reduce;
    // stored roots are then stable under further extension.
    unsigned target = (p == 2) ? precision + 1 : precision;
    Int pk = pow_int(p, have);
    while (have < target) {
        r = lift_step(r, m, p, pk);
        pk *= p;
        ++have;
        r %= pk;
        if (r < 0) r += pk;
    }
    if (p == 2) r %= pow_int(p, precision);
    return SplitPrimeBranch{p, m, r, precision};
}

// A 2-adic square-root branch is only pinned down once the chain has
// stabilized (every odd residue squares to m mod 8); build to precision >= 4
// and report the branch by the stabilized residue mod 8.
SplitPrimeBranch two_adic_branch(const Int& m, unsigned precision) {
    Int mm = m % 8;
    if (mm < 0) mm += 8;
    if (mm != 1) throw std::invalid_argument("hensel_sqrt: 2 splits only for m = 1 (mod 8)");
    return lift_to(m, 2, std::max(precision, 4u), 1, 3);
}

}  // namespace

SplitPrimeBranch hensel_sqrt(const Int& m, const Int& p, unsigned precision) {
    if (p == 2) {
        SplitPrimeBranch b = two_adic_branch(m, precision);
        Int s8 = b.root % 8;
        Int other = 8 - s8;
        if (other < s8) return conjugate_branch(b);
        return b;
    }
    if (legendre(m, p) != 1) throw std::invalid_argument("hensel_sqrt: m is not a residue");
    Int r0 = sqrt_mod_prime(m, p);
    Int r1 = p - r0;
    return hensel_sqrt_through(m, p, precision, r1 < r0 ? r1 : r0);
}

SplitPrimeBranch hensel_sqrt_through(const Int& m, const Int& p, unsigned precision,
                                     const Int& base_residue) {
    if (precision == 0) throw std::invalid_argument("hensel_sqrt: zero precision");
    if (p == 2) {
        Int want = base_residue % 8;
        if (want < 0) want += 8;
        SplitPrimeBranch b = two_adic_branch(m, precision);
        Int s8 = b.root % 8;
        if (want == s8) return b;
        if (want == 8 - s8) return conjugate_branch(b);
        throw std::invalid_argument("hensel_sqrt: residue is not a 2-adic root class");
    }
    Int b = base_residue % p;
    if (b < 0) b += p;
    if ((b * b - m) % p != 0) throw std::invalid_argument("hensel_sqrt: bad base residue");
    return lift_to(m, p, precision, b, 1);
}

SplitPrimeBranch extend_precision(const SplitPrimeBranch& b, unsigned precision) {
    if (precision <= b.precision) return b;
    return lift_to(b.m, b.p, precision, b.root, b.precision);
}

SplitPrimeBranch conjugate_branch(const SplitPrimeBranch& b) {
    return SplitPrimeBranch{b.p, b.m, pow_int(b.p, b.precision) - b.root, b.precision};
}

long valuation_at(const QuadFieldElement& x, const SplitPrimeBranch& branch) {
    if (x.is_zero()) throw std::invalid_argument("valuation_at: zero element");
    if (x.m() != branch.m) throw std::invalid_argument("valuation_at: field mismatch");
    long den_val = p_adic_valuation(x.den(), branch.p);
    // v(a + b*root) is capped by v_p of the numerator norm; lift past that cap
    // so the truncated embedding cannot misreport it.
    Int norm_num = x.a() * x.a() - x.m() * x.b() * x.b();
    long cap = p_adic_valuation(norm_num, branch.p);
    SplitPrimeBranch b = extend_precision(branch, static_cast<unsigned>(cap) + 1);
    Int pk = pow_int(b.p, b.precision);
    Int embedded = (x.a() + x.b() * b.root) % pk;
    if (embedded < 0) embedded += pk;
    if (embedded == 0) throw std::logic_error("valuation_at: precision cap failed");
    return p_adic_valuation(embedded, b.p) - den_val;
}

namespace detail {

std::vector<Int> contributing_primes(const std::array<QuadFieldElement, 6>& rotations,
                                     bool include_two_adic) {
    std::set<Int> primes;
    for (const auto& z : rotations) {
        for (const auto& [p, e] : factor(z.den())) {
            (void)e;
            if (p == 2) {
                Int mm = z.m() % 8;
                if (mm < 0) mm += 8;
                if (include_two_adic && mm == 1) primes.insert(p);
            } else if (splitting_type(p, z.m()) == SplittingType::Split) {
                primes.insert(p);
            }
        }
    }
    return std::vector<Int>(primes.begin(), primes.end());
}

}  // namespace detail

ValuationMatrix valuation_matrix(const IntEdgeTuple& edges, bool include_two_adic) {
    auto rotations = dihedral_rotations_squared(to_rational(edges));
    ValuationMatrix vm;
    for (const Int& p : detail::contributing_primes(rotations, include_two_adic)) {
        SplitPrimeBranch branch = hensel_sqrt(rotations[0].m(), p, 8);
        std::array<long, 6> row{};
        for (int i = 0; i < kEdgeCount; ++i) row[i] = valuation_at(rotations[i], branch);
        vm.branches.push_back(std::move(branch));
        vm.rows.push_back(row);
    }
    return vm;
}

int angle_span_dimension(const IntEdgeTuple& edges) {
    ValuationMatrix vm = valuation_matrix(edges, /*include_two_adic=*/true);
    std::vector<std::vector<Int>> m;
    m.reserve(vm.rows.size());
    for (const auto& row : vm.rows) {
        std::vector<Int> r(row.begin(), row.end());
        m.push_back(std::move(r));
    }
    return rank_over_q(std::move(m));
}

}  // namespace tetrazero
