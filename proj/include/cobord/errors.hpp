#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : Error {
    DimensionTooLarge() : Error("dimension too large") {}
    explicit DimensionTooLarge(const std::string& m) : Error(m) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular over GF(2)") {}
};

struct ZeroFactor : Error {
    ZeroFactor() : Error("monomial factor is the zero vector") {}
};

struct SideMismatch : Error {
    SideMismatch() : Error("operands live on different sides of the pairing") {}
};

struct NotFaithful : Error {
    NotFaithful() : Error("polynomial is not faithful") {}
    explicit NotFaithful(const std::string& m) : Error(m) {}
};

struct NotABasis : Error {
    NotABasis() : Error("factors do not form a basis") {}
};

struct NotACycle : Error {
    NotACycle() : Error("polynomial is not in the kernel of d") {}
};

struct NotSquarefree : Error {
    NotSquarefree() : Error("polynomial is not squarefree") {}
};

struct MalformedGraph : Error {
    explicit MalformedGraph(const std::string& m) : Error(m) {}
};

struct BoundaryNonzero : Error {
    BoundaryNonzero() : Error("d of the dual polynomial is nonzero; labels do not pair") {}
};

struct MonomialMismatch : Error {
    MonomialMismatch() : Error("vertex color multisets differ") {}
};

struct InvalidColoring : Error {
    explicit InvalidColoring(const std::string& m) : Error(m) {}
};

struct WrongDegree : Error {
    explicit WrongDegree(const std::string& m) : Error(m) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& m) : Error(m) {}
};

// Byte offset into the input for expression parsing, line number (1-based)
// for table/coloring files.
struct ParseError : Error {
    ParseError(const std::string& m, std::size_t where) : Error(m), position(where) {}
    std::size_t position;
};

}  // namespace cobord
