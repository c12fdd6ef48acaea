#pragma once

#include <stdexcept>
#include <string>

namespace nodaltorus {

// Bad user-facing input (CLI maps this to exit code 2).
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition of an operation does not hold.
class PreconditionError : public InvalidInputError {
public:
    explicit PreconditionError(const std::string& what) : InvalidInputError(what) {}
};

// An internal invariant failed; indicates a bug, not bad input (exit code 1).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// T+ and T- disagreed as eigenvalue multisets. They are isospectral, so this
// can only mean the enumeration or grouping is broken.
class IsospectralityViolation : public InternalError {
public:
    explicit IsospectralityViolation(const std::string& what) : InternalError(what) {}
};

class SingularMatrixError : public InvalidInputError {
public:
    explicit SingularMatrixError(const std::string& what) : InvalidInputError(what) {}
};

class NotPositiveDefiniteError : public InvalidInputError {
public:
    explicit NotPositiveDefiniteError(const std::string& what) : InvalidInputError(what) {}
};

class DimensionMismatchError : public InvalidInputError {
public:
    explicit DimensionMismatchError(const std::string& what) : InvalidInputError(what) {}
};

// sin part of the q = 0 eigenfunction vanishes identically; it has no nodal count.
class DegenerateEigenfunctionError : public InvalidInputError {
public:
    explicit DegenerateEigenfunctionError(const std::string& what) : InvalidInputError(what) {}
};

// A grid cell center landed exactly on the zero set; caller retries with
// different offsets.
class GridDegeneracyError : public std::runtime_error {
public:
    explicit GridDegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// A form in an m = 4 difference set does not match either base coefficient
// multiset; would falsify the parity structure.
class ClassificationFailureError : public InternalError {
public:
    explicit ClassificationFailureError(const std::string& what) : InternalError(what) {}
};

} // namespace nodaltorus
