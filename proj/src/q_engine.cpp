#include "schurq/q_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace schurq {

void QExpansion::add_term(const StrictPartition& sp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(sp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void QExpansion::add_normalized(const IntVector& v, const Rational& c) {
    auto norm = normalize(v);
    if (norm.coefficient == 0) return;
    add_term(norm.partition, c * norm.coefficient);
}

Rational QExpansion::coefficient(const StrictPartition& sp) const {
    auto it = coeffs_.find(sp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

QExpansion& QExpansion::operator+=(const QExpansion& o) {
    for (auto& [sp, c] : o.coeffs_) add_term(sp, c);
    return *this;
}

QExpansion QExpansion::scaled(const Rational& c) const {
    QExpansion out;
    if (c == 0) return out;
    for (auto& [sp, v] : coeffs_) out.coeffs_.emplace(sp, v * c);
    return out;
}

SkewMatrix::SkewMatrix(int dimension) : dim_(dimension) {
    if (dimension < 0) throw std::invalid_argument("negative dimension");
    upper_.resize(static_cast<std::size_t>(dimension) * dimension);
}

const OddPoly& SkewMatrix::upper(int i, int j) const {
    if (i < 0 || j <= i || j >= dim_) throw std::invalid_argument("upper(i, j) needs i < j");
    return upper_[static_cast<std::size_t>(i) * dim_ + j];
}

void SkewMatrix::set_upper(int i, int j, OddPoly p) {
    if (i < 0 || j <= i || j >= dim_) throw std::invalid_argument("upper(i, j) needs i < j");
    upper_[static_cast<std::size_t>(i) * dim_ + j] = std::move(p);
}

namespace {

OddPoly pfaffian_rec(const SkewMatrix& m, std::uint32_t active,
                     std::map<std::uint32_t, OddPoly>& memo) {
    if (active == 0) return OddPoly::constant(1);
    auto it = memo.find(active);
    if (it != memo.end()) return it->second;

    std::vector<int> idx;
    for (int i = 0; i < m.dimension(); ++i) {
        if (active & (1u << i)) idx.push_back(i);
    }
    OddPoly sum;
    int sign = 1;
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const OddPoly& entry = m.upper(idx[0], idx[t]);
        if (!entry.is_zero()) {
            std::uint32_t rest = active & ~(1u << idx[0]) & ~(1u << idx[t]);
            OddPoly sub = pfaffian_rec(m, rest, memo);
            sum += entry.mul(sub).scaled(sign);
        }
        sign = -sign;
    }
    memo.emplace(active, sum);
    return sum;
}

}  // namespace

OddPoly pfaffian(const SkewMatrix& m) {
    if (m.dimension() % 2 != 0) throw OddDimension("pfaffian needs even dimension");
    if (m.dimension() > 30) throw std::invalid_argument("pfaffian dimension too large");
    std::map<std::uint32_t, OddPoly> memo;
    std::uint32_t all = m.dimension() == 0 ? 0 : ((1u << m.dimension()) - 1);
    return pfaffian_rec(m, all, memo);
}

std::vector<OddPoly> QEngine::gen_q(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    q_k_locked(max_degree);
    return {q_cache_.begin(), q_cache_.begin() + max_degree + 1};
}

OddPoly QEngine::q_k(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    return q_k_locked(k);
}

OddPoly QEngine::q_k_locked(int k) {
    if (k < static_cast<int>(q_cache_.size())) return q_cache_[static_cast<std::size_t>(k)];

    // Expand exp(2 Σ t_{2j+1} z^{2j+1}) as a z-series with OddPoly
    // coefficients, truncated at z^k.
    int n = k;
    std::vector<OddPoly> gen(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; j += 2) gen[static_cast<std::size_t>(j)] = OddPoly::variable(j).scaled(2);

    std::vector<OddPoly> result(static_cast<std::size_t>(n) + 1);
    std::vector<OddPoly> power(static_cast<std::size_t>(n) + 1);
    result[0] = OddPoly::constant(1);
    power[0] = OddPoly::constant(1);
    for (int iter = 1; iter <= n; ++iter) {
        std::vector<OddPoly> next(static_cast<std::size_t>(n) + 1);
        bool any = false;
        for (int a = 0; a <= n; ++a) {
            if (power[static_cast<std::size_t>(a)].is_zero()) continue;
            for (int b = 1; a + b <= n; b += 2) {
                OddPoly prod = power[static_cast<std::size_t>(a)].mul(gen[static_cast<std::size_t>(b)]);
                if (prod.is_zero()) continue;
                next[static_cast<std::size_t>(a + b)] += prod.scaled(rational(1, iter));
                any = true;
            }
        }
        power = std::move(next);
        for (int a = 0; a <= n; ++a) result[static_cast<std::size_t>(a)] += power[static_cast<std::size_t>(a)];
        if (!any) break;
    }

    q_cache_.assign(result.begin(), result.end());
    return q_cache_[static_cast<std::size_t>(k)];
}

OddPoly QEngine::m_entry(int r, int s) {
    std::lock_guard<std::mutex> lock(mu_);
    return m_entry_locked(r, s);
}

OddPoly QEngine::m_entry_locked(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("M entry indices must be non-negative");
    if (r == 0 && s == 0) return OddPoly{};
    auto key = std::make_pair(r, s);
    auto it = m_cache_.find(key);
    if (it != m_cache_.end()) return it->second;

    q_k_locked(r + s);
    OddPoly m = q_cache_[static_cast<std::size_t>(r)].mul(q_cache_[static_cast<std::size_t>(s)]);
    for (int i = 1; i <= s; ++i) {
        OddPoly prod = q_cache_[static_cast<std::size_t>(r + i)].mul(q_cache_[static_cast<std::size_t>(s - i)]);
        m += prod.scaled(i % 2 == 0 ? 2 : -2);
    }
    m_cache_.emplace(key, m);
    return m;
}

OddPoly QEngine::q_poly(const IntVector& v) {
    auto norm = normalize(v);
    if (norm.coefficient == 0) return OddPoly{};
    return q_poly(norm.partition).scaled(norm.coefficient);
}

OddPoly QEngine::q_poly(const StrictPartition& sp) {
    std::lock_guard<std::mutex> lock(mu_);
    return q_poly_locked(sp);
}

OddPoly QEngine::q_poly_locked(const StrictPartition& sp) {
    auto it = qpoly_cache_.find(sp);
    if (it != qpoly_cache_.end()) return it->second;

    std::vector<int> parts = sp.parts();
    if (parts.size() % 2 != 0) parts.push_back(0);  // Q_λ = Q_(λ,0) for odd length
    int dim = static_cast<int>(parts.size());
    SkewMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            m.set_upper(i, j, m_entry_locked(parts[static_cast<std::size_t>(i)],
                                             parts[static_cast<std::size_t>(j)]));
        }
    }
    OddPoly q = pfaffian(m);
    qpoly_cache_.emplace(sp, q);
    return q;
}

const QEngine::WeightBasis& QEngine::weight_basis_locked(int weight) {
    auto it = basis_cache_.find(weight);
    if (it != basis_cache_.end()) return it->second;

    WeightBasis wb;
    for (auto& sp : enumerate_strict(weight)) {
        if (sp.weight() == weight) wb.partitions.push_back(sp);
    }
    // Monomials of this degree in odd variables (same count as strict
    // partitions of the weight).
    std::vector<Monomial> monomials;
    std::vector<std::pair<int, int>> stack;
    auto emit = [&]() {
        Monomial m;
        for (auto& [k, e] : stack) m = m * Monomial::power(k, e);
        monomials.push_back(m);
    };
    std::function<void(int, int)> rec = [&](int remaining, int max_var) {
        if (remaining == 0) {
            emit();
            return;
        }
        int start = std::min(max_var, remaining);
        if (start % 2 == 0) --start;
        for (int k = start; k >= 1; k -= 2) {
            for (int e = remaining / k; e >= 1; --e) {
                stack.emplace_back(k, e);
                rec(remaining - k * e, k - 2);
                stack.pop_back();
            }
        }
    };
    rec(weight, weight);
    std::sort(monomials.begin(), monomials.end());
    wb.monomials = std::move(monomials);

    std::size_t n = wb.partitions.size();
    if (n != wb.monomials.size()) throw std::logic_error("basis dimension mismatch");

    std::map<Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < n; ++r) row_of.emplace(wb.monomials[r], r);

    // Gauss-Jordan inversion of the (monomial x partition) coefficient matrix.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t c = 0; c < n; ++c) {
        OddPoly q = q_poly_locked(wb.partitions[c]);
        for (auto& [mono, coeff] : q.terms()) a[row_of.at(mono)][c] = coeff;
        inv[c][c] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("Q-basis matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    wb.inverse = std::move(inv);
    return basis_cache_.emplace(weight, std::move(wb)).first->second;
}

QExpansion QEngine::expand_in_q_basis(const OddPoly& p) {
    QExpansion out;
    std::map<int, OddPoly> by_weight;
    for (auto& [m, c] : p.terms()) by_weight[m.degree()].add_term(m, c);

    std::lock_guard<std::mutex> lock(mu_);
    for (auto& [w, comp] : by_weight) {
        const WeightBasis& wb = weight_basis_locked(w);
        std::size_t n = wb.partitions.size();
        std::vector<Rational> b(n, Rational(0));
        std::map<Monomial, std::size_t> row_of;
        for (std::size_t r = 0; r < n; ++r) row_of.emplace(wb.monomials[r], r);
        for (auto& [m, c] : comp.terms()) b[row_of.at(m)] = c;
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] != 0) x += wb.inverse[i][j] * b[j];
            }
            out.add_term(wb.partitions[i], x);
        }
    }
    return out;
}

QExpansion QEngine::expand_in_q_basis_inner(const OddPoly& p) {
    QExpansion out;
    if (p.is_zero()) return out;
    int max_w = *p.degree();
    for (auto& sp : enumerate_strict(max_w)) {
        Rational c = inner_product(p, q_poly(sp));
        if (c == 0) continue;
        out.add_term(sp, c / rational_pow(2, sp.length()));
    }
    return out;
}

OddPoly QEngine::to_poly(const QExpansion& e) {
    OddPoly out;
    for (auto& [sp, c] : e.coeffs()) out += q_poly(sp).scaled(c);
    return out;
}

Rational inner_product(const OddPoly& p, const OddPoly& q) {
    Rational total = 0;
    for (auto& [m, cp] : p.terms()) {
        Rational cq = q.coefficient(m);
        if (cq == 0) continue;
        Rational w = 1;
        for (auto& [k, e] : m.exponents()) {
            w *= Rational(factorial(e)) / rational_pow(2 * k, e);
        }
        total += cp * cq * w;
    }
    return total;
}

namespace {

void check_partition_vector(const IntVector& lam) {
    for (int x : lam) {
        if (x < 0) throw std::invalid_argument("expected a non-negative index vector");
    }
}

void check_odd_r(int r) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("r must be odd and >= 1");
}

IntVector bumped(const IntVector& lam, std::size_t i, int delta) {
    IntVector v = lam;
    v[i] += delta;
    return v;
}

IntVector appended(IntVector lam, std::initializer_list<int> extra) {
    for (int x : extra) lam.push_back(x);
    return lam;
}

}  // namespace

QExpansion half_derivative_basis(const IntVector& lam, int r) {
    check_partition_vector(lam);
    check_odd_r(r);
    QExpansion out;
    for (std::size_t i = 0; i < lam.size(); ++i) out.add_normalized(bumped(lam, i, -r), 1);
    return out;
}

QExpansion multiply_tr_basis(const IntVector& lam, int r) {
    check_partition_vector(lam);
    check_odd_r(r);
    QExpansion out;
    for (std::size_t i = 0; i < lam.size(); ++i) out.add_normalized(bumped(lam, i, r), 1);
    out.add_normalized(appended(lam, {r}), rational(1, 2));
    for (int k = 1; k <= r - 1; ++k) {
        out.add_normalized(appended(lam, {k, r - k}), rational((r - k) % 2 == 0 ? 1 : -1, 4));
    }
    return out;
}

QExpansion l_prime_action(int which, const StrictPartition& lam) {
    if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
    int shift = which == 1 ? 2 : 4;
    QExpansion out;
    const auto& parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int coeff = parts[i] - which;
        if (coeff == 0) continue;
        out.add_normalized(bumped(parts, i, -shift), coeff);
    }
    return out;
}

QExpansion l2_prime_adjoint_basis(const StrictPartition& lam) {
    QExpansion out;
    const auto& parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.add_normalized(bumped(parts, i, 4), parts[i] + 2);
    }
    out.add_normalized(appended(parts, {4}), 1);
    out.add_normalized(appended(parts, {3, 1}), rational(-1, 2));
    return out;
}

AdjointAction adjoint_virasoro_basis(int m, const StrictPartition& lam) {
    const auto& parts = lam.parts();
    std::size_t l = parts.size();
    AdjointAction act;
    if (m == -1) {
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) {
                if (i == j) continue;
                IntVector v = parts;
                v[i] -= 1;
                v[j] -= 1;
                act.order0.add_normalized(v, rational(-1, 4));
            }
            act.order0.add_normalized(bumped(parts, i, -2), rational(2 * parts[i] - 3, 4));
            act.order_m1.add_normalized(bumped(parts, i, 1), -1);
        }
        act.order_m1.add_normalized(appended(parts, {1}), rational(-1, 2));
    } else if (m == 2) {
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) {
                if (i == j) continue;
                IntVector v = parts;
                v[i] += 3;
                v[j] += 1;
                act.order0.add_normalized(v, 1);
            }
            act.order0.add_normalized(bumped(parts, i, 4), rational(parts[i] + 4, 2));
            act.order0.add_normalized(appended(bumped(parts, i, 3), {1}), rational(1, 2));
            act.order0.add_normalized(appended(bumped(parts, i, 1), {3}), rational(1, 2));
            act.order0.add_normalized(appended(bumped(parts, i, 1), {2, 1}), rational(-1, 2));
            act.order_m1.add_normalized(bumped(parts, i, 7), -1);
        }
        act.order0.add_normalized(appended(parts, {4}), 1);
        act.order0.add_normalized(appended(parts, {3, 1}), rational(-1, 2));
        for (int r = 0; r <= 3; ++r) {
            act.order_m1.add_normalized(appended(parts, {7 - r, r}),
                                        rational(r % 2 == 0 ? -1 : 1, 2));
        }
    } else {
        throw std::invalid_argument("adjoint action implemented for m in {-1, 2}");
    }
    return act;
}

}  // namespace schurq
