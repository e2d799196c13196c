#pragma once

#include <stdexcept>
#include <string>

namespace momoa {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed instance or result text; carries the 1-based position of the offending token.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
    int line;
    int column;
};

struct ValidationError : Error {
    using Error::Error;
};

struct InfeasibleInstance : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

/// Batch intersection produced an empty set; impossible for cuts from a correct oracle.
struct EmptyPolyhedron : Error {
    using Error::Error;
};

struct LpInfeasible : Error {
    using Error::Error;
};

struct LpUnbounded : Error {
    using Error::Error;
};

/// Cutting-plane loop exceeded its row-generation cap (float-mode stall).
struct IterationLimit : Error {
    using Error::Error;
};

/// A structural invariant that the algorithm guarantees was observed broken.
struct InternalError : Error {
    using Error::Error;
};

} // namespace momoa
