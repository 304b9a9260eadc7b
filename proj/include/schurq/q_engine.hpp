#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <vector>

#include "schurq/odd_poly.hpp"
#include "schurq/partition.hpp"

namespace schurq {

/// Polynomial written in the Q-basis: map from strict partition to exact
/// coefficient, no zeros stored. Iteration order is (weight, decreasing-lex).
class QExpansion {
public:
    QExpansion() = default;

    void add_term(const StrictPartition& sp, const Rational& c);
    /// Adds c times the normalization of a raw index vector.
    void add_normalized(const IntVector& v, const Rational& c);

    Rational coefficient(const StrictPartition& sp) const;
    const std::map<StrictPartition, Rational>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    QExpansion& operator+=(const QExpansion& o);
    QExpansion scaled(const Rational& c) const;
    bool operator==(const QExpansion& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<StrictPartition, Rational> coeffs_;
};

/// Skew-symmetric matrix of polynomials; only the strict upper triangle is
/// stored, the diagonal is zero and the lower triangle is implied.
class SkewMatrix {
public:
    explicit SkewMatrix(int dimension);

    int dimension() const { return dim_; }
    /// Entry (i, j) with 0 <= i < j < dim.
    const OddPoly& upper(int i, int j) const;
    void set_upper(int i, int j, OddPoly p);

private:
    int dim_;
    std::vector<OddPoly> upper_;
};

/// Pfaffian by first-row expansion, memoized over index subsets.
/// Conventions: Pf of the empty matrix is 1, Pf([[0,a],[-a,0]]) = a.
/// Throws OddDimension.
OddPoly pfaffian(const SkewMatrix& m);

/// Builds q_k, M-entries and Q-polynomials, expands polynomials in the
/// Q-basis, and applies the basis-level operator actions. Caches are
/// mutex-guarded; all returned values are independent copies.
class QEngine {
public:
    QEngine() = default;
    QEngine(const QEngine&) = delete;
    QEngine& operator=(const QEngine&) = delete;

    /// q_0 .. q_max_degree from exp(2 Σ t_{2k+1} z^{2k+1}).
    std::vector<OddPoly> gen_q(int max_degree);
    OddPoly q_k(int k);

    /// M_{(r,s)} = q_r q_s + 2 Σ_{i=1..s} (-1)^i q_{r+i} q_{s-i}, M_{(0,0)} = 0.
    OddPoly m_entry(int r, int s);

    /// Q of an arbitrary index vector (at most one negative part).
    OddPoly q_poly(const IntVector& v);
    OddPoly q_poly(const StrictPartition& sp);

    /// Greedy elimination against a per-weight echelonized basis.
    QExpansion expand_in_q_basis(const OddPoly& p);
    /// Independent route: coefficient of λ is 2^{-l(λ)} <p, Q_λ>.
    QExpansion expand_in_q_basis_inner(const OddPoly& p);

    /// Σ coeff · Q_λ.
    OddPoly to_poly(const QExpansion& e);

private:
    struct WeightBasis {
        std::vector<StrictPartition> partitions;
        std::vector<Monomial> monomials;
        std::vector<std::vector<Rational>> inverse;  // maps monomial coords to Q coords
    };

    OddPoly q_k_locked(int k);
    OddPoly m_entry_locked(int r, int s);
    OddPoly q_poly_locked(const StrictPartition& sp);
    const WeightBasis& weight_basis_locked(int weight);

    std::mutex mu_;
    std::deque<OddPoly> q_cache_;
    std::map<std::pair<int, int>, OddPoly> m_cache_;
    std::map<StrictPartition, OddPoly> qpoly_cache_;
    std::map<int, WeightBasis> basis_cache_;
};

/// Bilinear form with <∏ t_r^{a_r}, ∏ t_r^{b_r}> = δ_{a,b} ∏ a_r!/(2r)^{a_r};
/// on the Q-basis this is 2^{l(λ)} δ_{λ,μ}.
Rational inner_product(const OddPoly& p, const OddPoly& q);

/// (1/2) ∂Q_λ/∂t_r = Σ_i Q_{λ - r e_i}, normalized. Valid for any
/// non-negative index vector λ, r odd >= 1.
QExpansion half_derivative_basis(const IntVector& lam, int r);

/// r t_r Q_λ = Σ_i Q_{λ + r e_i} + (1/2) Q_{(λ,r)}
///             + Σ_{k=1..r-1} ((-1)^{r-k}/4) Q_{(λ,k,r-k)}, normalized.
QExpansion multiply_tr_basis(const IntVector& lam, int r);

/// L'_1 Q_λ = Σ (λ_i - 1) Q_{λ-2e_i};  L'_2 Q_λ = Σ (λ_i - 2) Q_{λ-4e_i}.
QExpansion l_prime_action(int which, const StrictPartition& lam);

/// (L'_2)^⊥ Q_λ = Σ (λ_i + 2) Q_{λ+4e_i} + Q_{(λ,4)} - (1/2) Q_{(λ,3,1)}.
QExpansion l2_prime_adjoint_basis(const StrictPartition& lam);

/// The two ħ-components of (L_m)^⊥ Q_λ for m in {-1, 2}:
/// value = order0 + (1/ħ) order_m1.
struct AdjointAction {
    QExpansion order0;
    QExpansion order_m1;
};
AdjointAction adjoint_virasoro_basis(int m, const StrictPartition& lam);

}  // namespace schurq
