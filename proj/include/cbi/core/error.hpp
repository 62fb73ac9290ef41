#pragma once

#include <stdexcept>
#include <string>

namespace cbi {

/// Base of every error raised by the library. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

class InvalidSubstitution : public Error {
public:
    using Error::Error;
};

/// A closed form hit a vanishing denominator (recurrence coefficient, Pochhammer, ...).
class SingularParameter : public Error {
public:
    using Error::Error;
};

/// A rational-function action did not re-polynomialize. `remainder` is the offending
/// remainder in ascending coefficient order, rendered as text.
class NonPolynomialResult : public Error {
public:
    NonPolynomialResult(const std::string& what, std::string remainder)
        : Error(what + " (remainder " + remainder + ")"), remainder_(std::move(remainder)) {}
    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

class DivergentLimit : public Error {
public:
    using Error::Error;
};

class KernelDegenerate : public Error {
public:
    using Error::Error;
};

/// Signals a transcription bug: an identity that must hold by construction did not.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class NotTruncated : public Error {
public:
    using Error::Error;
};

class InadmissibleTruncation : public Error {
public:
    using Error::Error;
};

class GridPole : public Error {
public:
    GridPole(const std::string& what, long k) : Error(what), k_(k) {}
    long k() const noexcept { return k_; }

private:
    long k_;
};

class VerificationFailure : public Error {
public:
    using Error::Error;
};

class CasimirFailure : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

class ConditioningError : public Error {
public:
    using Error::Error;
};

}  // namespace cbi
