#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tetrazero {

using Int = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (sgn(base) == 0) throw std::invalid_argument("rational: 0^negative");
        return pow_rational(Rational(1) / base, -e);
    }
    Rational r = 1;
    Rational b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Accepts "p", "-p", or "p/q" with q > 0 after reduction. Rejects anything else.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return std::nullopt;
    bool seen_slash = false;
    bool digit_before = false, digit_after = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash || !digit_before) return std::nullopt;
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            return std::nullopt;
        }
    }
    if (seen_slash && !digit_after) return std::nullopt;
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
    if (sgn(Int(q.get_den())) == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace tetrazero
