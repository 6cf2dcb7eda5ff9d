#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcount {

/// Malformed or out-of-domain input, such as a zero modulus.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form was asked for outside the regime where it is proven.
class precondition_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed its work budget. Never truncated silently.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine-word intermediate (lcm, group order index) would overflow.
class arithmetic_overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline constexpr std::uint64_t default_work_budget = 10'000'000;

inline void require_budget(std::uint64_t work, std::uint64_t budget, const char* what) {
  if (work > budget) {
    throw budget_exceeded(std::string(what) + ": " + std::to_string(work) +
                          " work units exceeds budget of " + std::to_string(budget));
  }
}

}  // namespace homcount
