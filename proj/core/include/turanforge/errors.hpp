#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turanforge {

/// Out-of-range vertex, malformed parameter, domain mismatch.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The caller violated an operation's stated precondition (empty hole class, invalid colouring).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The request is well-formed but outside what the chosen method can do
/// (exhaustive enumeration too large, oracle cap exceeded).
class CapabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  /// Structural errors in formats without line tracking; line() is 0.
  explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace turanforge
