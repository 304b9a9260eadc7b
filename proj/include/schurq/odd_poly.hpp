#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schurq/errors.hpp"
#include "schurq/rational.hpp"

namespace schurq {

/// Monomial in the odd variables t_1, t_3, t_5, ...; deg t_k = k.
class Monomial {
public:
    Monomial() = default;

    /// t_k^e. k must be odd and >= 1, e >= 1.
    static Monomial power(int k, int e);

    /// Sorted (variable index, exponent) pairs, exponents >= 1.
    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int degree() const;
    int exponent_of(int k) const;

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    /// Graded order (degree first), then lex on the exponent list; any total
    /// order works for storage, this one keeps serialization deterministic.
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::pair<int, int>> exps_;
};

/// Sparse polynomial over exact rationals in t_1, t_3, t_5, ...
class OddPoly {
public:
    OddPoly() = default;
    static OddPoly constant(const Rational& c);
    static OddPoly variable(int k);  // t_k
    static OddPoly term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Max term degree; absent for the zero polynomial.
    std::optional<int> degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }

    OddPoly& operator+=(const OddPoly& o);
    OddPoly& operator-=(const OddPoly& o);
    OddPoly operator+(const OddPoly& o) const;
    OddPoly operator-(const OddPoly& o) const;
    OddPoly operator-() const;
    bool operator==(const OddPoly& o) const { return terms_ == o.terms_; }

    OddPoly scaled(const Rational& c) const;
    void add_term(const Monomial& m, const Rational& c);

    /// Product, dropping terms of degree > max_degree when given.
    OddPoly mul(const OddPoly& o, std::optional<int> max_degree = std::nullopt) const;
    OddPoly operator*(const OddPoly& o) const { return mul(o); }

    /// d/dt_k (k odd >= 1).
    OddPoly partial(int k) const;
    /// Multiplication by t_k.
    OddPoly mul_by_t(int k) const;

    /// Exact value at t_k = assignment[k]; unlisted variables are 0.
    Rational evaluate(const std::map<int, Rational>& assignment) const;

    OddPoly truncated(int max_degree) const;
    OddPoly homogeneous_part(int deg) const;
    /// True when every term has the given degree (vacuously for 0).
    bool is_homogeneous(int deg) const;

private:
    std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

/// Sum of p^n/n! truncated to max_degree. p must have zero constant term.
OddPoly exp_truncated(const OddPoly& p, int max_degree);

}  // namespace schurq
