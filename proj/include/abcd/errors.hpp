#pragma once

#include <stdexcept>
#include <string>

namespace abcd {

// Bad input: violated precondition or type invariant.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Result would overflow double. `exponent` is the natural-log size estimate.
class RangeError : public std::range_error {
 public:
  RangeError(const std::string& what, double exponent)
      : std::range_error(what), exponent_(exponent) {}
  double exponent() const noexcept { return exponent_; }

 private:
  double exponent_;
};

// A convention or algebra bug inside the library; never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace abcd
