#pragma once

#include <stdexcept>
#include <string>

namespace hausdim {

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// The operation exists but cannot serve this input shape (e.g. grid bounds on
// a lower-dimensional chart).
class UnsupportedOperationError : public std::logic_error {
public:
    explicit UnsupportedOperationError(const std::string& what) : std::logic_error(what) {}
};

// Too few usable data points to produce an estimate.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hausdim
