#pragma once

#include <stdexcept>
#include <string>

#include "tetrazero/factor.hpp"
#include "tetrazero/rational.hpp"

namespace tetrazero {

// coeff * sqrt(radicand) with radicand a squarefree positive integer.
// radicand 1 encodes a plain rational; coeff 0 forces radicand 1.
// Radicands are never negative here; complex values live in QuadFieldElement.
class SqrtQuantity {
public:
    SqrtQuantity() : coeff_(0), radicand_(1) {}

    SqrtQuantity(Rational coeff, Int radicand) {
        if (sgn(radicand) < 0) throw std::invalid_argument("SqrtQuantity: negative radicand");
        if (sgn(coeff) == 0 || sgn(radicand) == 0) {
            coeff_ = 0;
            radicand_ = 1;
            return;
        }
        auto parts = squarefree_decompose(radicand);
        coeff_ = std::move(coeff) * parts.square_root;
        radicand_ = std::move(parts.squarefree);
    }

    static SqrtQuantity from_rational(Rational q) {
        SqrtQuantity s;
        s.coeff_ = std::move(q);
        return s;
    }

    // Exact square root of a nonnegative rational: sqrt(a/b) = sqrt(a*b)/b.
    static SqrtQuantity sqrt_of(const Rational& q) {
        if (sgn(q) < 0) throw std::invalid_argument("SqrtQuantity: sqrt of negative rational");
        return SqrtQuantity(make_rational(Int(1), q.get_den()), Int(q.get_num() * q.get_den()));
    }

    const Rational& coeff() const { return coeff_; }
    const Int& radicand() const { return radicand_; }

    bool is_zero() const { return sgn(coeff_) == 0; }
    bool is_rational() const { return radicand_ == 1; }
    int sign() const { return sgn(coeff_); }

    // value^2, always a plain rational.
    Rational squared() const { return coeff_ * coeff_ * Rational(radicand_); }

    SqrtQuantity operator-() const {
        SqrtQuantity r = *this;
        r.coeff_ = -r.coeff_;
        return r;
    }

    friend SqrtQuantity operator*(const SqrtQuantity& x, const SqrtQuantity& y) {
        if (x.is_zero() || y.is_zero()) return SqrtQuantity();
        // Both radicands squarefree, so r1*r2 = g^2 * (r1/g)(r2/g) with the
        // last product squarefree; no factorization needed.
        Int g = gcd(x.radicand_, y.radicand_);
        SqrtQuantity r;
        r.coeff_ = x.coeff_ * y.coeff_ * g;
        r.radicand_ = (x.radicand_ / g) * (y.radicand_ / g);
        return r;
    }

    friend SqrtQuantity operator*(const Rational& q, const SqrtQuantity& x) {
        if (sgn(q) == 0 || x.is_zero()) return SqrtQuantity();
        SqrtQuantity r = x;
        r.coeff_ *= q;
        return r;
    }

    friend bool operator==(const SqrtQuantity& x, const SqrtQuantity& y) {
        return x.coeff_ == y.coeff_ && x.radicand_ == y.radicand_;
    }
    friend bool operator!=(const SqrtQuantity& x, const SqrtQuantity& y) { return !(x == y); }

    std::string str() const {
        if (is_rational()) return to_string(coeff_);
        return to_string(coeff_) + "*sqrt(" + to_string(radicand_) + ")";
    }

private:
    Rational coeff_;
    Int radicand_;
};

}  // namespace tetrazero
