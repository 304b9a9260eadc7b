#pragma once

#include <compare>
#include <vector>

#include "schurq/errors.hpp"

namespace schurq {

/// Raw index vector for Q_λ. Parts may be zero, unordered, and at most one
/// may be negative (the case handled by the extended Q definition).
using IntVector = std::vector<int>;

/// Strictly decreasing positive parts; the canonical Q-basis index.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Validates strict decrease and positivity.
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
    /// Canonical enumeration order: weight ascending, then decreasing-lex
    /// (within a weight, the lexicographically larger part vector first).
    bool operator<(const StrictPartition& o) const;

private:
    std::vector<int> parts_;
};

struct NormalizeResult {
    /// In {-2,-1,0,1,2}; zero iff Q of the input vanishes.
    int coefficient = 0;
    StrictPartition partition;
};

/// Reduces an index vector to ±1/±2 times a strict partition (or zero),
/// following the skew-symmetry rules, zero-part rules, and the one-negative
/// -part extension. Throws MoreThanOneNegativePart.
NormalizeResult normalize(const IntVector& v);

/// All strict partitions of weight 0..max_weight, each once, ordered by
/// (weight, decreasing-lex). Includes the empty partition.
std::vector<StrictPartition> enumerate_strict(int max_weight);

/// Parts split by residue mod 3: (3k_1,...,3k_p, 3m_1+1,...,3m_q+1,
/// 3n_1+2,...,3n_r+2), keeping the source's relative order in each class.
struct StandardForm {
    std::vector<int> ks;
    std::vector<int> ms;
    std::vector<int> ns;

    int p() const { return static_cast<int>(ks.size()); }
    int q() const { return static_cast<int>(ms.size()); }
    int r() const { return static_cast<int>(ns.size()); }

    /// The rearranged part vector (3k_1,...,3m_1+1,...,3n_1+2,...).
    IntVector reassemble() const;
};

struct StandardFormResult {
    StandardForm form;
    /// Parity of the permutation carrying the source to the standard order.
    int sign = 1;
};

StandardFormResult standard_form(const StrictPartition& sp);
/// Same class split for an arbitrary non-negative vector (stable within
/// classes); used by the identity evaluators that take standard-form input.
StandardFormResult standard_form(const IntVector& v);

}  // namespace schurq
