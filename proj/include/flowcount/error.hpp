#pragma once

#include <stdexcept>
#include <string>

namespace flowcount {

/// Malformed or infeasible user input (bad JSON, zero-sum violation, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Either a bug or a violated theorem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flowcount
