#include "schurq/odd_poly.hpp"

#include <algorithm>

namespace schurq {

namespace {

void check_odd_index(int k) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("variable index must be odd and >= 1");
}

}  // namespace

Monomial Monomial::power(int k, int e) {
    check_odd_index(k);
    if (e < 1) throw std::invalid_argument("exponent must be >= 1");
    Monomial m;
    m.exps_.emplace_back(k, e);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [k, e] : exps_) d += k * e;
    return d;
}

int Monomial::exponent_of(int k) const {
    for (auto& [kk, e] : exps_) {
        if (kk == k) return e;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    std::size_t a = 0, b = 0;
    while (a < exps_.size() || b < o.exps_.size()) {
        if (b == o.exps_.size() || (a < exps_.size() && exps_[a].first < o.exps_[b].first)) {
            out.exps_.push_back(exps_[a++]);
        } else if (a == exps_.size() || o.exps_[b].first < exps_[a].first) {
            out.exps_.push_back(o.exps_[b++]);
        } else {
            out.exps_.emplace_back(exps_[a].first, exps_[a].second + o.exps_[b].second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return exps_ < o.exps_;
}

OddPoly OddPoly::constant(const Rational& c) {
    OddPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

OddPoly OddPoly::variable(int k) {
    OddPoly p;
    p.add_term(Monomial::power(k, 1), 1);
    return p;
}

OddPoly OddPoly::term(const Monomial& m, const Rational& c) {
    OddPoly p;
    p.add_term(m, c);
    return p;
}

std::optional<int> OddPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

Rational OddPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void OddPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OddPoly& OddPoly::operator+=(const OddPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

OddPoly& OddPoly::operator-=(const OddPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

OddPoly OddPoly::operator+(const OddPoly& o) const {
    OddPoly out = *this;
    out += o;
    return out;
}

OddPoly OddPoly::operator-(const OddPoly& o) const {
    OddPoly out = *this;
    out -= o;
    return out;
}

OddPoly OddPoly::operator-() const {
    return scaled(-1);
}

OddPoly OddPoly::scaled(const Rational& c) const {
    OddPoly out;
    if (c == 0) return out;
    for (auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

OddPoly OddPoly::mul(const OddPoly& o, std::optional<int> max_degree) const {
    OddPoly out;
    for (auto& [ma, ca] : terms_) {
        int da = ma.degree();
        if (max_degree && da > *max_degree) continue;
        for (auto& [mb, cb] : o.terms_) {
            if (max_degree && da + mb.degree() > *max_degree) continue;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

OddPoly OddPoly::partial(int k) const {
    check_odd_index(k);
    OddPoly out;
    for (auto& [m, c] : terms_) {
        int e = m.exponent_of(k);
        if (e == 0) continue;
        Monomial rest;
        for (auto& [kk, ee] : m.exponents()) {
            if (kk == k) {
                if (ee > 1) rest = rest * Monomial::power(kk, ee - 1);
            } else {
                rest = rest * Monomial::power(kk, ee);
            }
        }
        out.add_term(rest, c * e);
    }
    return out;
}

OddPoly OddPoly::mul_by_t(int k) const {
    check_odd_index(k);
    OddPoly out;
    Monomial tk = Monomial::power(k, 1);
    for (auto& [m, c] : terms_) out.add_term(m * tk, c);
    return out;
}

Rational OddPoly::evaluate(const std::map<int, Rational>& assignment) const {
    Rational total = 0;
    for (auto& [m, c] : terms_) {
        Rational v = c;
        for (auto& [k, e] : m.exponents()) {
            auto it = assignment.find(k);
            if (it == assignment.end() || it->second == 0) {
                v = 0;
                break;
            }
            v *= rational_pow(it->second, e);
        }
        total += v;
    }
    return total;
}

OddPoly OddPoly::truncated(int max_degree) const {
    OddPoly out;
    for (auto& [m, c] : terms_) {
        if (m.degree() <= max_degree) out.terms_.emplace(m, c);
    }
    return out;
}

OddPoly OddPoly::homogeneous_part(int deg) const {
    OddPoly out;
    for (auto& [m, c] : terms_) {
        if (m.degree() == deg) out.terms_.emplace(m, c);
    }
    return out;
}

bool OddPoly::is_homogeneous(int deg) const {
    for (auto& [m, c] : terms_) {
        (void)c;
        if (m.degree() != deg) return false;
    }
    return true;
}

OddPoly exp_truncated(const OddPoly& p, int max_degree) {
    if (p.constant_term() != 0) throw NonzeroConstantTerm("exp argument has a constant term");
    OddPoly base = p.truncated(max_degree);
    OddPoly result = OddPoly::constant(1);
    OddPoly power = OddPoly::constant(1);
    for (long n = 1; !power.is_zero(); ++n) {
        power = power.mul(base, max_degree).scaled(rational(1, n));
        result += power;
    }
    return result;
}

}  // namespace schurq
