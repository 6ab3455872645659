#pragma once

#include <stdexcept>
#include <string>

namespace movcone {

// Invalid parameters, indices or malformed input. The CLI maps these to exit 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematically undefined request: singular matrix, mixed radicands,
// a point that is not on the conic, a zero-sum chart projection.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration would exceed the configured word budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace movcone
