#ifndef CONTINGENT_ERROR_HPP
#define CONTINGENT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contingent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (files, formula text, atom sets).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Formula text that does not conform to the grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation's precondition does not hold for otherwise well-formed input,
/// e.g. a builder invoked on an assessment that violates the axiom it needs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace contingent

#endif  // CONTINGENT_ERROR_HPP
