#include "tetrazero/real.hpp"

#include <cstdlib>

#include "tetrazero/multi_quad.hpp"

namespace tetrazero {

std::string Real::str(int digits) const {
    if (digits <= 0) digits = static_cast<int>(prec() / kBitsPerDigit);
    char* s = nullptr;
    // %.NRg: N significant digits, round to nearest.
    int n = mpfr_asprintf(&s, "%.*Rg", digits, v_);
    if (n < 0) return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

RealInterval RealInterval::sqrt_of(const Int& n, mpfr_prec_t bits) {
    Real lo(bits), hi(bits);
    mpfr_t t;
    mpfr_init2(t, bits + 8);
    mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(lo.raw(), t, MPFR_RNDD);
    mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(hi.raw(), t, MPFR_RNDU);
    mpfr_clear(t);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.lo_.prec(), b.lo_.prec());
    Real lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.lo_.prec(), b.lo_.prec());
    Real lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::scaled(const Rational& q, mpfr_prec_t bits) const {
    Real lo(bits), hi(bits);
    if (sgn(q) >= 0) {
        mpfr_mul_q(lo.raw(), lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(hi.raw(), hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(lo.raw(), hi_.raw(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(hi.raw(), lo_.raw(), q.get_mpq_t(), MPFR_RNDU);
    }
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::acos_of(mpfr_prec_t bits) const {
    Real lo(bits), hi(bits);
    mpfr_t x;
    mpfr_init2(x, std::max(lo_.prec(), hi_.prec()));
    // acos is decreasing: image of [lo, hi] is [acos(hi), acos(lo)].
    mpfr_set(x, hi_.raw(), MPFR_RNDN);
    if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
    if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
    mpfr_acos(lo.raw(), x, MPFR_RNDD);
    mpfr_set(x, lo_.raw(), MPFR_RNDN);
    if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
    if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
    mpfr_acos(hi.raw(), x, MPFR_RNDU);
    mpfr_clear(x);
    return RealInterval(std::move(lo), std::move(hi));
}

bool RealInterval::abs_below(const Rational& bound) const {
    Rational neg = -bound;
    return lo_.cmp_rational(neg) > 0 && hi_.cmp_rational(bound) < 0;
}

namespace {

RealInterval evaluate_terms(const std::map<Int, Rational>& terms, mpfr_prec_t bits) {
    RealInterval acc = RealInterval::exact(Rational(0), bits);
    for (const auto& [rad, c] : terms) {
        if (rad == 1) {
            acc = acc + RealInterval::exact(c, bits);
        } else {
            acc = acc + RealInterval::sqrt_of(rad, bits).scaled(c, bits);
        }
    }
    return acc;
}

}  // namespace

int MultiQuadNumber::sign() const {
    if (terms_.empty()) return 0;
    // Nonzero by unique representation, so refinement terminates.
    for (mpfr_prec_t bits = 128;; bits *= 2) {
        RealInterval enc = evaluate_terms(terms_, bits);
        if (!enc.contains_zero()) return enc.lo().sign() > 0 ? 1 : -1;
    }
}

}  // namespace tetrazero
