#ifndef LCG_ERRORS_HPP
#define LCG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Combining coefficient modes, or an operation that has no exact rational answer.
class ModeError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// Argument outside the domain of an operation (sqrt of a non-positive number, |alpha| > 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Invalid graph or vertex function input. line() is 0 when the error is not tied to a file line.
class GraphError : public Error {
public:
  explicit GraphError(const std::string &what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Root lifting could not separate every root cluster at the working truncation.
class LiftError : public Error {
public:
  using Error::Error;
};

// A multiplicity found among the roots is not matched by the eigenspace at working precision.
class PrecisionError : public LiftError {
public:
  using LiftError::LiftError;
};

} // namespace lcg

#endif // LCG_ERRORS_HPP
