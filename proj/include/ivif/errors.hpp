#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivif {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An interval or value constraint does not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operands of an elementwise operation have different shapes.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

/// Permutation expansion refused: n! terms would exceed the order cap.
class OrderTooLarge : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Malformed input document. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& reason, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + reason : reason),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ivif
