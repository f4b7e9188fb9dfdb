#pragma once

#include <stdexcept>
#include <string>

namespace cycov {

/// Violation of a mathematical precondition (bad input, not a bug).
struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested coefficient lies beyond the guaranteed-valid truncation order.
/// Callers recover by recomputing at a higher order.
struct TruncationError : std::runtime_error {
    int needed_order;
    explicit TruncationError(int needed, const std::string& what)
        : std::runtime_error(what), needed_order(needed) {}
};

/// Two independent computation routes disagree. This falsifies the
/// implementation, never the input; it must not be caught and ignored.
struct OracleMismatch : std::logic_error {
    explicit OracleMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cycov
