#pragma once

#include <stdexcept>

namespace latspan {

/// Violated precondition or size guard on user-supplied input.
/// The CLI maps these to exit code 2 with a one-line diagnostic.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latspan
