#pragma once

// Error types shared by every module. Plain argument errors use
// std::invalid_argument directly; the classes below carry a distinct meaning
// that callers (the CLI in particular) map to exit codes.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artinlab {

/// A computation would exceed a configured size, memory or integer-width budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A module-level invariant failed during a run. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two congruences in a CRT system have no common solution.
class IncompatibleCongruences : public std::invalid_argument {
public:
    IncompatibleCongruences(std::size_t first, std::size_t second, const std::string& what)
        : std::invalid_argument(what), first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Evaluation point where some n + h_i vanishes mod p.
class ExcludedPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A constructive procedure found no object satisfying its requirements.
class ConstructionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A census did not produce enough elements for the requested statistic.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expectations requested against a zero total weight.
class DegenerateDistribution : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The quadratic-form pair is unusable (B not positive definite).
class InvalidProblem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The supplied basis is linearly dependent.
class RankDeficiency : public InvalidProblem {
public:
    using InvalidProblem::InvalidProblem;
};

}  // namespace artinlab
