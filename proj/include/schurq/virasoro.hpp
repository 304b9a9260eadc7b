#pragma once

#include <map>
#include <vector>

#include "schurq/hbar_series.hpp"
#include "schurq/partition.hpp"
#include "schurq/q_engine.hpp"

namespace schurq {

/// The ħ-order-preserving part of L_m (everything except -(1/2ħ)∂_{2m+3}):
/// (1/4) Σ_{a+b=2m} ∂_a∂_b + (1/2) Σ_k k t_k ∂_{k+2m}
/// + (1/4) t_1² δ_{m,-1} + δ_{m,0}/16.
OddPoly virasoro_degree_part(int m, const OddPoly& f);

/// Full L_m on an ħ-series; the 1/ħ term shifts slices down by one order.
/// Throws IndexBelowMinusOne for m < -1.
HbarSeries apply_L(int m, const HbarSeries& s);

/// (L_k L_m - L_m L_k - (k-m) L_{k+m}) s; identically zero when no slice
/// truncation interferes.
HbarSeries bracket_residual(int k, int m, const HbarSeries& s);

/// String-side functional on a doubled index (A-values only):
/// Φ(μ) = Σ_{i≠j} A_{2μ-2e_i-2e_j}/((2μ_i-1)(2μ_j-1)) - Σ A_{2μ-4e_i}/(2μ_i-1)
///        + (1/4) Σ (2μ_i+1) A_{2μ+2e_i} + (1/8) A_{(2μ,2)}.
Rational phi_functional(const IntVector& mu);

/// Dilaton-side functional Ψ(μ) (the long seven-group expression with the
/// double falling factorials).
Rational psi_functional(const IntVector& mu);

struct ConstraintResidual {
    int m = 0;
    std::vector<int> reliable_orders;
    std::map<int, OddPoly> residual_slices;  // nonzero slices on the window
    bool all_zero() const { return residual_slices.empty(); }
};

/// L_m τ restricted to ħ-orders a with 3(a+1) <= truncation degree (the
/// window where the 1/ħ coupling to order a+1 is complete).
ConstraintResidual constraint_residual(int m, const HbarSeries& tau);

struct PairingCheck {
    Rational lhs;  // Σ over reliable orders of <(L_m τ)_a, Q_μ>
    Rational rhs;  // closed form via hook ratio and Φ/Ψ
    bool order_integral = false;
    int hbar_order = 0;
    Rational residual() const { return lhs - rhs; }
};

/// Both routes of the pairing identity for m in {-1, 2}. Throws
/// TruncationInsufficient when τ is too shallow for the target order.
PairingCheck pairing_theorem_check(int m, const StrictPartition& mu, const HbarSeries& tau,
                                   QEngine& engine);

}  // namespace schurq
