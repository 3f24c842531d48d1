#pragma once

#include <map>
#include <string>

#include "tetrazero/rational.hpp"
#include "tetrazero/sqrt_quantity.hpp"

namespace tetrazero {

// Finite sum of coeff * sqrt(radicand) over distinct squarefree radicands >= 1.
// Distinct squarefree radicals are linearly independent over Q, so the term map
// is a unique representation and equality is coefficient-wise.
class MultiQuadNumber {
public:
    MultiQuadNumber() = default;
    MultiQuadNumber(const SqrtQuantity& q) { add_term(q); }
    MultiQuadNumber(const Rational& q) { add_term(SqrtQuantity::from_rational(q)); }
    MultiQuadNumber(long v) : MultiQuadNumber(Rational(v)) {}

    const std::map<Int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    friend MultiQuadNumber operator+(const MultiQuadNumber& x, const MultiQuadNumber& y) {
        MultiQuadNumber r = x;
        for (const auto& [rad, c] : y.terms_) r.add_coeff(rad, c);
        return r;
    }

    friend MultiQuadNumber operator-(const MultiQuadNumber& x, const MultiQuadNumber& y) {
        MultiQuadNumber r = x;
        for (const auto& [rad, c] : y.terms_) r.add_coeff(rad, -c);
        return r;
    }

    MultiQuadNumber operator-() const {
        MultiQuadNumber r;
        for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, -c);
        return r;
    }

    friend MultiQuadNumber operator*(const MultiQuadNumber& x, const MultiQuadNumber& y) {
        MultiQuadNumber r;
        for (const auto& [rx, cx] : x.terms_)
            for (const auto& [ry, cy] : y.terms_) {
                Int g = gcd(rx, ry);
                r.add_coeff((rx / g) * (ry / g), cx * cy * g);
            }
        return r;
    }

    friend bool operator==(const MultiQuadNumber& x, const MultiQuadNumber& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MultiQuadNumber& x, const MultiQuadNumber& y) { return !(x == y); }

    // Exact sign: 0 for the empty sum, otherwise adaptive-precision interval
    // evaluation refined until the enclosure excludes zero.
    int sign() const;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [rad, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += SqrtQuantity(c, rad).str();
        }
        return s;
    }

private:
    void add_term(const SqrtQuantity& q) {
        if (!q.is_zero()) add_coeff(q.radicand(), q.coeff());
    }

    void add_coeff(const Int& radicand, const Rational& c) {
        if (sgn(c) == 0) return;
        auto it = terms_.find(radicand);
        if (it == terms_.end()) {
            terms_.emplace(radicand, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    std::map<Int, Rational> terms_;
};

}  // namespace tetrazero
