#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spcrit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    OrderMismatch() : Error("symmetric sets belong to different cycle orders") {}
};

/// An internal invariant (e.g. negation symmetry) was broken.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A parallel sum would join two single edges into a multi-edge.
class MultiEdge : public Error {
public:
    MultiEdge() : Error("parallel sum would create a multi-edge") {}
};

class NotSeriesParallel : public Error {
public:
    using Error::Error;
};

/// Input exceeds a desk-scale size guard; retry with the override flag.
class GuardRefusal : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace spcrit
