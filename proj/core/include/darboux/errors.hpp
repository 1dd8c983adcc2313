#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A jet division whose denominator vanishes at the expansion point.
/// Signals a node of a denominator function (wavefunction or Wronskian).
struct SingularDivision : Error {
    explicit SingularDivision(double where_)
        : Error("singular division at x = " + std::to_string(where_)), where(where_) {}
    double where;
};

/// Argument outside the mathematical domain of an operation (e.g. log of a
/// non-positive jet value).
struct DomainError : Error {
    using Error::Error;
};

/// Jets combined at different expansion points or orders. These are contract
/// violations, never silently repaired.
struct JetMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

/// A requested bound level does not exist for the given parameters.
struct UnboundLevel : Error {
    using Error::Error;
};

/// Eigenfunction index outside the valid range for the requested transform.
struct IndexError : Error {
    using Error::Error;
};

/// Family has no shape-invariance parameter flow.
struct MissingFlow : Error {
    using Error::Error;
};

/// Proportionality comparison against a numerically zero function.
struct DegenerateComparand : Error {
    using Error::Error;
};

/// Grid construction removed every point.
struct EmptyGrid : Error {
    using Error::Error;
};

/// Operation asked for an order it does not support (e.g. Gegenbauer n > 3).
struct Unsupported : Error {
    using Error::Error;
};

/// Malformed run configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace darboux
