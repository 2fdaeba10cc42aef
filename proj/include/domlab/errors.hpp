#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlab {

// Invalid input data: a candidate table violating a monoid law, a map that is
// not a homomorphism, a subset that is not a submonoid, bad parameters.
// The message names the first violated law together with a witness.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string const& msg) : std::runtime_error(msg) {}
};

// Malformed text input; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string const& msg)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A guarded enumeration would exceed its configured search budget.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(std::string const& msg) : std::runtime_error(msg) {}
};

// Two independent computations of the same set disagree.  Signals either an
// implementation bug or an insufficient zigzag length cap; never ignorable.
class MethodDisagreement : public std::logic_error {
 public:
  MethodDisagreement(std::string const& msg, std::size_t element, std::size_t cap)
      : std::logic_error(msg), element_(element), cap_(cap) {}

  std::size_t element() const noexcept { return element_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t element_;
  std::size_t cap_;
};

}  // namespace domlab
