#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurq {

/// Exact rational scalar. Canonical form (positive denominator, coprime)
/// is maintained by GMP for all arithmetic results.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

/// Canonical "p" / "p/q" string, e.g. "3", "-5/2".
inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

inline Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

/// b^e for integer e of either sign.
inline Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return 1;
    Rational b = base;
    int e = exp;
    if (e < 0) {
        if (b == 0) throw std::domain_error("0 to a negative power");
        b = 1 / b;
        e = -e;
    }
    Rational acc = 1;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace schurq
