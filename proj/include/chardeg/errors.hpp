#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chardeg {

/// A configured size limit (element count, class count) was exceeded.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A group specification names an unsupported family or parameter.
class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public SpecError {
public:
  ParseError(std::size_t position, std::string expected, std::string const &text);

  std::size_t position() const { return position_; }
  std::string const &expected() const { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

/// A caller broke an operation's precondition (e.g. a non-closed subset).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// zeta -> zeta^k with gcd(k, conductor) != 1 is not a field automorphism.
class InvalidAutomorphism : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; results cannot be trusted.
class InternalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace chardeg
