#pragma once

#include <string>
#include <vector>

#include "schurq/hbar_series.hpp"
#include "schurq/partition.hpp"
#include "schurq/q_engine.hpp"

namespace schurq {

enum class TauKind { MM, KWOracle };

/// KW-graded series: ħ⁰ slice is 1, the ħ^a slice is homogeneous of
/// t-degree 3a, and only a >= 0 occurs.
struct TauSeries {
    HbarSeries series;
    TauKind kind;

    int degree() const { return series.truncation_degree(); }
};

/// Explicit Q-basis expansion: Σ_λ (ħ/16)^{|λ|/3} 2^{-l} ·
/// hook(λ)·A_{2λ}/hook(2λ) · Q_λ, summed over strict |λ| <= degree.
TauSeries build_tau_mm(int degree, QEngine& engine, int workers = 1);

/// Independent oracle: the unique KW-graded series with unit ħ⁰ slice
/// annihilated by every L_m, solved order by order from the constraint
/// equations alone. Throws InconsistentSystem on any re-check failure.
TauSeries build_tau_kw(int degree);

struct TauDifference {
    int hbar_order = 0;
    Monomial monomial;
    Rational coeff_a;
    Rational coeff_b;
};

/// Exact per-monomial differences through the given degree; empty iff equal.
std::vector<TauDifference> compare_tau(const TauSeries& a, const TauSeries& b, int degree);

struct Correlator {
    std::vector<int> ks;  // sorted descending
    int genus = 0;
    Rational value;
    /// False when no genus satisfies the dimension constraint (value 0).
    bool dimension_ok = false;
};

/// Intersection number <τ_{k_1}···τ_{k_n}>_g read off log τ. Throws
/// TruncationInsufficient when the needed ħ-order exceeds the truncation.
Correlator extract_correlator(const TauSeries& tau, std::vector<int> ks);

/// log τ as an ħ-series (slices a >= 1).
HbarSeries log_tau(const TauSeries& tau);

/// Scalar of the form value · ħ^power.
struct HbarScalar {
    Rational value;
    int hbar_power = 0;

    HbarScalar operator*(const HbarScalar& o) const { return {value * o.value, hbar_power + o.hbar_power}; }
    bool operator==(const HbarScalar& o) const {
        return (value == 0 && o.value == 0) || (value == o.value && hbar_power == o.hbar_power);
    }
};

/// Content-product coefficient θ_λ of the diagonal double-Q form
/// (requires q = r in the standard form, else the ħ-power is fractional).
HbarScalar theta_coefficient(const StrictPartition& lam);

/// True exactly when the standard form of λ has q = r (the partitions that
/// contribute to the diagonal form).
bool hyper_contributing(const StrictPartition& lam);

/// Multiplicative one-row coefficients η_{(k)} assembled over the parts;
/// c1·c2 must equal -ħ/16 (ConstraintViolation otherwise).
HbarScalar eta_coefficient(const StrictPartition& lam, const HbarScalar& c1, const HbarScalar& c2);

struct HyperCheck {
    bool contributing = false;
    HbarScalar theta;
    HbarScalar eta;
    /// θ_λ - η_λ on the contributing set (0 otherwise by convention).
    Rational theta_eta_residual;
    /// Q-basis coefficient of τ_MM against θ_λ · 2^{-l} · A_λ (the diagonal
    /// form with t*_k = 2δ_{k,3}/3, halved).
    Rational diagonal_residual;
};

HyperCheck hypergeometric_check(const StrictPartition& lam, const HbarScalar& c1,
                                const HbarScalar& c2);

}  // namespace schurq
