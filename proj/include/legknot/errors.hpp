#pragma once

#include <stdexcept>
#include <string>

namespace legknot {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch: non-square input, wrong vector length, non-symmetric
// matrix passed to an inertia computation, out-of-bounds entry access.
struct DimensionError : Error {
    using Error::Error;
};

// det M = 0: the surgered manifold is not a rational homology sphere,
// so the rational invariants are undefined.
struct SingularMatrixError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (bad slope, bad family
// parameters, invalid lens space data, non-unimodular gluing).
struct DomainError : Error {
    using Error::Error;
};

// A formula's hypothesis is not met, e.g. the d3 surgery formula with a
// tb = 0 component among the (+1)-surgeries.
struct FormulaError : Error {
    using Error::Error;
};

// An identity that is a theorem failed to hold; signals a bug or an
// invalid diagram.
struct ConsistencyError : Error {
    using Error::Error;
};

// Diagram file syntax error; carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};

}  // namespace legknot
