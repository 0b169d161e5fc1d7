#pragma once

#include <stdexcept>
#include <string>

namespace pafold {

// Input outside an operation's documented domain (bad parameters, wrong
// variable lists, constant polynomial where degree >= 1 is required, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not match the polynomial grammar.  pos is a 0-based offset
// into the input string.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t pos_)
      : std::runtime_error(what + " at position " + std::to_string(pos_)),
        pos(pos_) {}
};

// exact_div with a non-zero remainder (or a non-integer quotient).
struct DivisionError : std::runtime_error {
  explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

// Geometric fold precondition violation; the message names the offending cusp.
struct FoldError : std::runtime_error {
  explicit FoldError(const std::string& what) : std::runtime_error(what) {}
};

// Folding-circuit data that fails validation; the message names the step.
struct CircuitError : std::runtime_error {
  explicit CircuitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pafold
