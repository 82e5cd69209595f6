#pragma once

#include <stdexcept>
#include <string>

namespace ghdist {

/// Raised when a distance grid fails one of the metric axioms. Carries the
/// violated axiom and the witnessing indices (unused indices are -1).
class MetricError : public std::runtime_error {
public:
    enum class Kind {
        NotSquare,
        NonFinite,
        NonzeroDiagonal,
        Asymmetric,
        NegativeOrZeroOffDiagonal,
        TriangleViolation,
    };

    MetricError(Kind kind, const std::string& message, int i = -1, int j = -1, int k = -1)
        : std::runtime_error(message), kind_(kind), i_(i), j_(j), k_(k) {}

    Kind kind() const { return kind_; }
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }

private:
    Kind kind_;
    int i_, j_, k_;
};

/// Precondition and usage errors outside of metric-axiom validation.
class DomainError : public std::runtime_error {
public:
    enum class Code {
        SizeMismatch,
        EmptySubset,
        NegativeScale,
        DimensionMismatch,
        DuplicatePoint,
        EmptyComposition,
        TooLarge,
        EpsilonTooLarge,
        OutOfRange,
        ModelHasEdges,
        BadParameters,
        BudgetExceeded,
    };

    DomainError(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

} // namespace ghdist
