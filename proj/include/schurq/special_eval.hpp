#pragma once

#include "schurq/partition.hpp"
#include "schurq/rational.hpp"

namespace schurq {

/// (2k-1)!! style double factorial of an odd n >= -1, with (-1)!! = 1.
Integer odd_double_factorial(int n);

/// x_[[k]] = x (x-2) ... (x-2k+2); empty product for k = 0.
Integer double_falling(int x, int k);

/// Q_λ at t_k = δ_{k,1}: 2^{|λ|}/λ! · ∏_{i<j} (λ_i-λ_j)/(λ_i+λ_j),
/// coefficient-adjusted through normalization.
Rational hook_eval(const IntVector& v);

/// A_λ = Q_λ at t_k = δ_{k,3}/3, via the standard-form closed formula.
/// Accepts at most one negative part (extended-definition handling).
Rational a_const(const IntVector& v);

/// Q_λ(δ_{k,1}) / Q_{2λ}(δ_{k,1}) = ∏_j (2λ_j - 1)!!.
Rational ratio_dfact(const StrictPartition& lam);

/// A_{2λ} from A_λ through the doubling formula; must equal a_const(2λ).
Rational a_double(const StrictPartition& lam);

}  // namespace schurq
