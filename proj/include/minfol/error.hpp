#pragma once

#include <stdexcept>
#include <string>

namespace minfol {

// Raised when an input violates a mathematical precondition (det != 1,
// malformed ramification data, disconnected origami, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised by exact integer kernels when an intermediate value leaves int64.
class ArithmeticOverflow : public DomainError {
 public:
  explicit ArithmeticOverflow(const std::string& what)
      : DomainError("integer overflow in " + what) {}
};

}  // namespace minfol
