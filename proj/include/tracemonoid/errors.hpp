#pragma once

#include <stdexcept>
#include <string>

namespace tracemonoid {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: text that does not parse or fails structural validation.
/// The CLI maps these to exit status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Well-formed input on which the requested operation is undefined.
/// The CLI maps these to exit status 1.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public UsageError {
public:
    ParseError(std::size_t line, const std::string& what)
        : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : UsageError(what), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public UsageError {
public:
    using UsageError::UsageError;
};

/// Clique or trace enumeration would exceed the configured cap.
class CombinatorialBlowup : public DomainError {
public:
    using DomainError::DomainError;
};

/// residual(u, v) requested although u is not a prefix of v.
class NotAPrefix : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operation requires an irreducible monoid (connected dependence graph).
class Reducible : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operation requires a trace with at least one letter.
class EmptyTrace : public DomainError {
public:
    using DomainError::DomainError;
};

/// No root of the clique polynomial was found in (0, 1].
class NoRootInUnitInterval : public DomainError {
public:
    using DomainError::DomainError;
};

/// Leading coefficient of the completion equation vanishes.
class DegenerateCoefficient : public DomainError {
public:
    using DomainError::DomainError;
};

/// Completion equation solves to a non-positive characteristic number.
class NonPositiveSolution : public DomainError {
public:
    using DomainError::DomainError;
};

/// Valuation fails the boundary-measure criterion.
class NotMobius : public DomainError {
public:
    using DomainError::DomainError;
};

/// A clique sequence violates normal-form admissibility.
class NotAdmissible : public DomainError {
public:
    NotAdmissible(std::size_t index, const std::string& what)
        : DomainError(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// A chain state has no admissible successor mass to normalize by.
class ZeroNormalization : public DomainError {
public:
    using DomainError::DomainError;
};

/// Linear solve and its iterative fallback both failed to converge.
class SolveFailure : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace tracemonoid
