#include "tetrazero/bounds.hpp"

#include <stdexcept>

#include "tetrazero/geometry.hpp"
#include "tetrazero/linalg.hpp"

namespace tetrazero {

namespace {

Real bound_constant(mpfr_prec_t bits) {
    Real denom = log(Real::from(2L, bits));
    for (long p : {3L, 5L, 7L, 11L}) denom = denom * log(Real::from(p, bits));
    return Real::from(32L, bits) / denom;
}

// C * ln(9 N^8)^5
Real rhs(const Real& n, const Real& c, mpfr_prec_t bits) {
    Real inner = log(Real::from(9L, bits) * pow_ui(n, 8));
    return c * pow_ui(inner, 5);
}

}  // namespace

BoundReport case5_bound(int precision_digits) {
    if (precision_digits < 20) throw std::invalid_argument("case5_bound: precision too low");
    mpfr_prec_t bits = Real::digits_to_bits(precision_digits + 10);
    Real c = bound_constant(bits);

    Real lo = Real::from(Rational(1000000), bits);          // RHS exceeds N here
    Real hi = Real::from(pow_int(Int(10), 16), bits);       // and falls below N here
    if (!(rhs(lo, c, bits) > lo) || !(rhs(hi, c, bits) < hi))
        throw std::logic_error("case5_bound: bracket does not straddle the crossing");
    Real two = Real::from(2L, bits);
    for (int iter = 0; iter < precision_digits * 4 + 64; ++iter) {
        Real mid = (lo + hi) / two;
        if (rhs(mid, c, bits) > mid)
            lo = mid;
        else
            hi = mid;
    }

    BoundReport report{c, (lo + hi) / two, Int(0), precision_digits};
    // Pin the integral crossing exactly: largest N with N <= RHS(N).
    Int n;
    mpfr_get_z(n.get_mpz_t(), report.fixed_point.raw(), MPFR_RNDD);
    auto holds = [&](const Int& v) {
        Real rv = Real::from(v, bits);
        return rhs(rv, c, bits) >= rv;
    };
    while (!holds(n)) --n;
    while (holds(n + 1)) ++n;
    report.certified_integer_bound = n;
    return report;
}

HadamardBounds hadamard_bound(const std::vector<std::vector<Rational>>& matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("hadamard_bound: matrix not square");
    if (n == 0) return {SqrtQuantity::from_rational(Rational(1)), Rational(1)};

    Rational max_abs = 0;
    Rational product = 1;
    for (const auto& row : matrix) {
        Rational l1 = 0;
        for (const auto& v : row) {
            Rational a = abs(v);
            if (a > max_abs) max_abs = a;
            l1 += a;
        }
        product *= l1;
    }
    // (sqrt(n) a)^n = a^n * sqrt(n^n)
    SqrtQuantity entrywise =
        SqrtQuantity(pow_rational(max_abs, static_cast<long>(n)), pow_int(Int(static_cast<long>(n)), n));
    return {entrywise, product};
}

bool minor_bound_check(std::int64_t max_edge, long samples, unsigned long seed) {
    if (max_edge < 3) throw std::invalid_argument("minor_bound_check: max_edge too small");
    Rational cap = Rational(3) * pow_rational(Rational(static_cast<long>(max_edge)), 4);

    auto faces_ok = [&](const EdgeTuple& t) {
        CayleyMengerData cm = cayley_menger(t);
        for (const auto& fm : cm.face_minor)
            if (abs(fm) > cap) return false;
        return true;
    };

    double space = 1;
    for (int i = 0; i < 6; ++i) space *= static_cast<double>(max_edge);
    if (space <= static_cast<double>(samples)) {
        IntEdgeTuple e = {1, 1, 1, 1, 1, 1};
        while (true) {
            if (!faces_ok(to_rational(e))) return false;
            int pos = 5;
            while (pos >= 0 && e[pos] == max_edge) e[pos--] = 1;
            if (pos < 0) break;
            ++e[pos];
        }
        return true;
    }

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    for (long i = 0; i < samples; ++i) {
        IntEdgeTuple e;
        for (int j = 0; j < 6; ++j) {
            Int v = rng.get_z_range(Int(static_cast<long>(max_edge)));
            e[j] = 1 + static_cast<std::int64_t>(v.get_si());
        }
        if (!faces_ok(to_rational(e))) return false;
    }
    return true;
}

}  // namespace tetrazero
