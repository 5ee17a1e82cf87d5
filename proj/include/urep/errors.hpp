#pragma once

#include <stdexcept>
#include <string>

namespace urep {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A letter of the word exceeds the declared alphabet size n.
struct AlphabetTooSmall : Error {
    using Error::Error;
};

// An edge or substitution pair (i,j) was given with i >= j.
struct BadEdgeOrder : Error {
    using Error::Error;
};

// Vertex count out of range.
struct BadSize : Error {
    using Error::Error;
};

// Vertex subset empty or not contained in [n].
struct BadVertexSet : Error {
    using Error::Error;
};

// verify() requires A(w) = [n].
struct AlphabetMismatch : Error {
    using Error::Error;
};

// No universal construction exists for patterns of length 2.
struct UnsupportedPattern : Error {
    using Error::Error;
};

// A prefix builder was called with a pattern outside its theorem's shape.
struct WrongCore : Error {
    using Error::Error;
};

// Search budget below the vertex count.
struct BudgetTooSmall : Error {
    using Error::Error;
};

// Labeling sweep guard: n! relabelings only up to n = 8.
struct TooManyLabelings : Error {
    using Error::Error;
};

namespace detail {
inline std::string locate(const std::string& what, int line, int column) {
    std::string msg = what;
    if (line > 0) {
        msg += " (line " + std::to_string(line);
        if (column > 0) msg += ", column " + std::to_string(column);
        msg += ")";
    }
    return msg;
}
}  // namespace detail

// Malformed textual input. line/column are 1-based; 0 means unknown.
struct ParseError : Error {
    int line;
    int column;
    explicit ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(detail::locate(what, line, column)), line(line), column(column) {}
};

// Vertex index outside [n] in a graph file.
struct RangeError : ParseError {
    using ParseError::ParseError;
};

// Repeated edge in a graph file.
struct DuplicateEdge : ParseError {
    using ParseError::ParseError;
};

}  // namespace urep
