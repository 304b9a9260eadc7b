#pragma once

#include <stdexcept>
#include <string>

namespace schurq {

struct MoreThanOneNegativePart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonzeroConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OddDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OddLengthWithoutZeroPad : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HypothesisViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexBelowMinusOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TruncationInsufficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstraintViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signals an internal bug: the constraint system is provably consistent.
struct InconsistentSystem : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace schurq
