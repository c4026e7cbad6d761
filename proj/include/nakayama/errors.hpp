#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

// Bad user-supplied parameters (CLI exit code 1).
struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

// A theory assumption was violated at runtime, e.g. a knit produced a
// negative cohomology dimension or a valuation > 1 (CLI exit code 3).
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal inconsistency: should never fire on correct code (CLI exit code 3).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace nakayama
