#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

/// Malformed or invalid user input (system documents, words, options).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource budget (state count, class size) was exceeded.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Reaching this is a bug.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cfc
