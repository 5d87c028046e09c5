#pragma once

#include <stdexcept>
#include <string>

namespace cox {

/// A diagram file could not be parsed. Carries the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A Coxeter matrix violated one of the presentation conditions while
/// constructing a system.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its contract (bad subset, wrong
/// system, unmet hypothesis).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root coordinate vector could not be certified positive or negative
/// at the active sign tolerance. Surfaced, never resolved silently.
class NumericalAmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured element cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cox
