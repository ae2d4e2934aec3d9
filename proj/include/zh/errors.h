#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zh {

// Malformed text input (FEN, SAN, UCI move, book line, ...). `offset` is a
// byte offset into the offending string, or a line number for line-oriented
// formats.
struct ParseError : std::runtime_error {
    size_t offset;
    explicit ParseError(const std::string& msg, size_t off = 0)
        : std::runtime_error(msg), offset(off) {}
};

// SAN input that matches more than one legal move.
struct AmbiguousMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllegalMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Action index that does not decode to a legal move in the given position.
struct IllegalIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A move no action-table section accepts. Unreachable for legal moves.
struct UnencodableMove : std::logic_error {
    using std::logic_error::logic_error;
};

// Bad magic / version / truncation in a binary file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoLegalMoves : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zh
