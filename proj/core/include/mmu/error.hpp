#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmu {

/// Bad caller input: out-of-range parameters, shape mismatches, malformed data.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or product would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, singular systems and similar exact-arithmetic failures.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Default cap on the number of matrices an enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Default cap on term pairs in a single algebra product.
inline constexpr std::uint64_t kDefaultProductBudget = 100'000'000;

}  // namespace mmu
