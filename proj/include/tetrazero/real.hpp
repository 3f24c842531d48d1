#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "tetrazero/rational.hpp"

namespace tetrazero {

// Arbitrary-precision real backed by MPFR. Precision is fixed per value;
// binary operations round to the wider operand's precision (RNDN).
class Real {
public:
    static constexpr double kBitsPerDigit = 3.3219280948873623;

    static mpfr_prec_t digits_to_bits(int digits) {
        return static_cast<mpfr_prec_t>(digits * kBitsPerDigit) + 16;
    }

    explicit Real(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
        return r;
    }
    static Real from(const Int& n, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(bits);
        mpfr_set_z(r.v_, n.get_mpz_t(), rnd);
        return r;
    }
    static Real from(double d, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(bits);
        mpfr_const_pi(r.v_, rnd);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real abs() const {
        Real r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real sqrt(const Real& a) { return unop(a, mpfr_sqrt); }
    friend Real acos(const Real& a) { return unop(a, mpfr_acos); }
    friend Real log(const Real& a) { return unop(a, mpfr_log); }
    friend Real pow_ui(const Real& a, unsigned long e) {
        Real r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

    int cmp_rational(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }

    // Decimal string with the requested number of significant digits.
    std::string str(int digits = 0) const;

private:
    static Real binop(const Real& a, const Real& b,
                      int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        Real r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real unop(const Real& a, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
        Real r(a.prec());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

// Closed enclosure [lo, hi] maintained with outward rounding. Supports just the
// operations needed for sign determination and angle-branch checks.
class RealInterval {
public:
    RealInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static RealInterval exact(const Rational& q, mpfr_prec_t bits) {
        return RealInterval(Real::from(q, bits, MPFR_RNDD), Real::from(q, bits, MPFR_RNDU));
    }
    static RealInterval pi(mpfr_prec_t bits) {
        return RealInterval(Real::pi(bits, MPFR_RNDD), Real::pi(bits, MPFR_RNDU));
    }
    // sqrt(n) for integer n >= 0.
    static RealInterval sqrt_of(const Int& n, mpfr_prec_t bits);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    RealInterval operator-() const { return RealInterval(-hi_, -lo_); }

    // Multiplication by an exact rational scalar.
    RealInterval scaled(const Rational& q, mpfr_prec_t bits) const;

    // acos applied elementwise; input is clamped to [-1, 1] (exact cosine values
    // may round a hair outside the domain).
    RealInterval acos_of(mpfr_prec_t bits) const;

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    // Certifies |x| < bound for every x in the enclosure.
    bool abs_below(const Rational& bound) const;
    Real width() const { return hi_ - lo_; }

private:
    Real lo_, hi_;
};

}  // namespace tetrazero
