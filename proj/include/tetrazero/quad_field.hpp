#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "tetrazero/rational.hpp"

namespace tetrazero {

// (a + b*sqrt(m)) / den, an element of Q(sqrt(m)) with m squarefree (m != 0, 1;
// negative m allowed). Canonical form: gcd(a, b, den) = 1 and den > 0.
class QuadFieldElement {
public:
    QuadFieldElement(Int a, Int b, Int den, Int m)
        : a_(std::move(a)), b_(std::move(b)), den_(std::move(den)), m_(std::move(m)) {
        if (sgn(den_) == 0) throw std::invalid_argument("QuadFieldElement: zero denominator");
        if (m_ == 0 || m_ == 1) throw std::invalid_argument("QuadFieldElement: radicand must define a quadratic field");
        canonicalize();
    }

    static QuadFieldElement one(const Int& m) { return QuadFieldElement(1, 0, 1, m); }

    static QuadFieldElement from_parts(const Rational& rational_part, const Rational& radical_coeff,
                                       const Int& m) {
        Int den = lcm(Int(rational_part.get_den()), Int(radical_coeff.get_den()));
        Int a = Int(rational_part.get_num()) * (den / rational_part.get_den());
        Int b = Int(radical_coeff.get_num()) * (den / radical_coeff.get_den());
        return QuadFieldElement(std::move(a), std::move(b), std::move(den), m);
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& den() const { return den_; }
    const Int& m() const { return m_; }

    Rational rational_part() const { return make_rational(a_, den_); }
    Rational radical_coeff() const { return make_rational(b_, den_); }

    // Field norm (a^2 - m b^2) / den^2, exact.
    Rational norm() const { return make_rational(a_ * a_ - m_ * b_ * b_, den_ * den_); }

    QuadFieldElement conjugate() const { return QuadFieldElement(a_, -b_, den_, m_); }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0 && den_ == 1; }
    bool is_minus_one() const { return a_ == -1 && sgn(b_) == 0 && den_ == 1; }

    friend bool operator==(const QuadFieldElement& x, const QuadFieldElement& y) {
        return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_ && x.den_ == y.den_;
    }
    friend bool operator!=(const QuadFieldElement& x, const QuadFieldElement& y) { return !(x == y); }

    friend QuadFieldElement operator*(const QuadFieldElement& x, const QuadFieldElement& y) {
        if (x.m_ != y.m_) throw std::invalid_argument("QuadFieldElement: mixed fields");
        return QuadFieldElement(x.a_ * y.a_ + x.m_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_,
                                x.den_ * y.den_, x.m_);
    }

    QuadFieldElement inverse() const {
        // 1/x = conj(x) / norm(x) for x != 0.
        Rational n = norm();
        if (sgn(n) == 0) throw std::invalid_argument("QuadFieldElement: inverse of zero-norm element");
        return QuadFieldElement(a_ * n.get_den(), -b_ * n.get_den(), den_ * n.get_num(), m_);
    }

    QuadFieldElement pow(unsigned long e) const {
        QuadFieldElement result = one(m_);
        QuadFieldElement base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    std::string str() const {
        return "(" + to_string(a_) + " + " + to_string(b_) + "*sqrt(" + to_string(m_) + "))/" +
               to_string(den_);
    }

private:
    void canonicalize() {
        if (sgn(den_) < 0) {
            a_ = -a_;
            b_ = -b_;
            den_ = -den_;
        }
        Int g = gcd(gcd(a_, b_), den_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            den_ /= g;
        }
    }

    Int a_, b_, den_, m_;
};

}  // namespace tetrazero
