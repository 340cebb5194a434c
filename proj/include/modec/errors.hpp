#pragma once

#include <stdexcept>
#include <string>

namespace modec {

/// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A group element with a negative coordinate where a nonnegative one is required.
struct NegativeElement : Error {
    explicit NegativeElement(const std::string& msg) : Error(msg) {}
};

/// Content (or another value) requested for the zero element.
struct ZeroElement : Error {
    explicit ZeroElement(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

/// Exact division requested between elements that do not divide.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

/// Both arguments of an extended gcd are zero.
struct BothZero : Error {
    explicit BothZero(const std::string& msg) : Error(msg) {}
};

/// A computed witness failed its defining identity; always a bug or a bad input.
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& msg) : Error(msg) {}
};

/// Operands belong to different ring instances, or the operation is undefined
/// for the instance it was called on.
struct InstanceMismatch : Error {
    explicit InstanceMismatch(const std::string& msg) : Error(msg) {}
};

/// A polynomial does not factor over the declared irreducible pool.
struct UnknownFactorization : Error {
    explicit UnknownFactorization(const std::string& msg) : Error(msg) {}
};

/// The instance lacks the Krull-dimension-1 guarantee some operation relies on.
struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(const std::string& msg) : Error(msg) {}
};

/// An inclusion problem normalized to a shape outside the decidable fragment.
struct UnsupportedShape : Error {
    explicit UnsupportedShape(const std::string& msg) : Error(msg) {}
};

/// An operation was called on arguments violating its documented precondition.
struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

/// Input text rejected by the parser; carries a 1-based position.
struct SyntaxError : Error {
    int line;
    int col;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

} // namespace modec
