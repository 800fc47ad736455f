#pragma once

#include <stdexcept>
#include <string>

namespace bricklab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural misuse of a graph: loops, unknown ids, duplicate labels, bad vertex sets.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its configured size cap.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input. The message carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A documented precondition of an analysis routine does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bricklab
