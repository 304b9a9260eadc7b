#pragma once

#include <string>
#include <vector>

#include "schurq/partition.hpp"
#include "schurq/rational.hpp"

namespace schurq {

/// One exact identity evaluation; pass iff the residual is exactly zero.
struct IdentityReport {
    std::string identity;
    IntVector input;
    Rational residual;
    bool pass = false;
};

/// Weight recursion: (|λ|/2) A_λ - Σ_i A_{λ-3e_i}. Any non-negative vector.
Rational rec_weight(const IntVector& lam);

/// Pfaffian recursion expanded at the pivot part (1-based):
/// A_λ - (-1)^{j-1} Σ_{i≠j} (-1)^{ĩ(j)} A_{(λ_j,λ_i)} A_{λ^{j,i}}.
/// Even-length weakly positive input (odd positive input is zero-padded;
/// odd input containing a zero throws OddLengthWithoutZeroPad). For inputs
/// of the shape (μ,0) with two zeros, the pivot at the final zero is
/// excluded (sign-ambiguous case).
Rational rec_pfaffian(const IntVector& lam, int pivot = 1);

/// Σ_{i<=r} A_{λ-e_{p+q+i}} over the standard-form arrangement.
Rational lemma_ni1(const IntVector& lam);
/// Σ_{i<=q} A_{λ+e_{p+i}} over the standard-form arrangement.
Rational lemma_qi1(const IntVector& lam);
/// Σ_i (-1)^{i+1} A_{(λ_i)} A_{λ^{i}} for positive even-length λ.
Rational lemma_even1(const IntVector& lam);

struct MultCorollaries {
    Rational append1;   // A_{(λ,1)} + 2 Σ A_{λ+e_i}
    Rational append21;  // A_{(λ,2,1)} - 2 Σ A_{λ+3e_i} - A_{(λ,3)} + 2 A_λ
};
MultCorollaries mult_corollaries(const IntVector& lam);

struct PhiParts {
    Rational phi1, phi2, phi3, phi2p;
};
/// The three reduced pieces of the string-equation functional plus the
/// auxiliary Φ₂' sum. Input: any permutation of a strict partition.
PhiParts phi_parts(const IntVector& mu);

struct PsiParts {
    Rational psi1, psi2;
};
/// The two reduced pieces of the dilaton-side functional.
PsiParts psi_parts(const IntVector& mu);

/// The seven auxiliary functionals M_1..M_7. Positive input; M_3/M_4 need
/// p > 1 odd, M_5 needs p odd, M_6/M_7 need p even (HypothesisViolated).
Rational m_functional(int which, const IntVector& lam);

struct AppendixResiduals {
    Rational b1, b2;
};
/// Alternating sums over the six permutations of positions a < b < c.
AppendixResiduals appendix_identities(int a, int b, int c, int ka, int kb, int kc);

/// Φ(μ_std) minus the rescaled δ-combination of Φ₁/Φ₂/Φ₃; zero checks that
/// the reduction used in the proof matches the raw functional.
Rational phi_recombination(const StrictPartition& mu);
Rational psi_recombination(const StrictPartition& mu);

struct SuiteConfig {
    int max_part = 12;
    int max_weight = 1 << 20;  // effectively unbounded unless set
    int max_length = 5;
    int random_instances = 200;
    unsigned seed = 0x5eed;
    int workers = 1;
};

std::vector<std::string> identity_family_names();

/// Evaluates one family (or "all") over its qualifying inputs within the
/// configured bounds plus randomized instances. Deterministic output order.
std::vector<IdentityReport> run_identity_suite(const std::string& family, const SuiteConfig& cfg);

}  // namespace schurq
