#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ternary {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text or bytes (edge lists, JSON, binary tensors).
class ParseError : public Error {
public:
    using Error::Error;
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// Violated invariant, bad argument, or inconsistent geometry.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Shape mismatch between tensors; the message names the offending axes.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Dense materialization would exceed the configured element budget.
class CapacityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Requested operation is defined but not supported for this input
/// (e.g. Laplacian machinery on a directed graph).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Iterative method ran out of iterations; carries the last estimate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_estimate)
        : Error(what), last_estimate_(last_estimate) {}

    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

}  // namespace ternary
