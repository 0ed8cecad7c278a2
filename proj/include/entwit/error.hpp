// entwit: bipartite entanglement-detection toolkit
// error.hpp — exception hierarchy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace entwit {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix or subsystem dimension does not match what the operation requires.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A scalar parameter lies outside its documented range.
struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// A matrix violates a structural invariant (Hermiticity, positivity, trace, …).
struct InvariantError : Error {
    explicit InvariantError(const std::string& what) : Error(what) {}
};

/// Text input (matrix files, CLI ranges) could not be parsed.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A bisection was requested on an interval whose endpoints do not bracket a sign change.
struct BracketError : Error {
    BracketError(const std::string& what, double lo_value, double hi_value)
        : Error(what), lo(lo_value), hi(hi_value) {}
    double lo;  ///< diagnostic at the lower endpoint
    double hi;  ///< diagnostic at the upper endpoint
};

} // namespace entwit
