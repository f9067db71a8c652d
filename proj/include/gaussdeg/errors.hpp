#pragma once

#include "gaussdeg/arith.hpp"

#include <stdexcept>
#include <string>

namespace gaussdeg {

/// Input outside a formula's stated range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Work bound exceeded (e.g. brute-force enumeration cap).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A value the mathematics guarantees (integrality, positivity, a proven
/// inequality) failed to hold. Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The generic-mode sum d_m^* came out non-positive: either the Gauss map is
/// not generically finite or the supplied integrals are inconsistent.
class NotGenericallyFinite : public std::runtime_error {
 public:
  explicit NotGenericallyFinite(BigInt total)
      : std::runtime_error("non-positive d_m^* = " + to_decimal(total) +
                           ": gamma_m not generically finite or invalid table"),
        total_(std::move(total)) {}

  const BigInt& total() const noexcept { return total_; }

 private:
  BigInt total_;
};

}  // namespace gaussdeg
