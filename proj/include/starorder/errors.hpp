#pragma once

#include <stdexcept>
#include <string>

namespace starorder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible or non-square shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain of an operation (non-finite entries, non-Hermitian input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A scalar map was evaluated where it is undefined.
class MapDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A precondition or structural invariant was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// The requested operation is not available for the given parameters.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A numerical kernel failed to produce a trustworthy result.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, std::string digest)
        : Error(what + " [input " + digest + "]"), digest_(std::move(digest)) {}

    const std::string& digest() const noexcept { return digest_; }

private:
    std::string digest_;
};

}  // namespace starorder
