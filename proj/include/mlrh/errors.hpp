#pragma once

#include <stdexcept>
#include <string>

namespace mlrh {

// Error taxonomy shared by the library and the CLI exit-code contract:
// usage -> 2, data/format -> 3, numerical -> 4.

/// Caller violated a precondition (bad shapes, bad flag values, ...).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A file or stream does not conform to its declared format.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed (non-convergence, loss of positive
/// definiteness, degenerate data).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mlrh
