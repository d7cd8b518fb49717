#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bijlab/errors.hpp"
#include "bijlab/exact_int.hpp"

namespace bijlab {

/// Upper bound on the number of objects any exhaustive enumeration may visit.
/// Double-exponential counts must come from formulas, never from iteration.
struct EnumBudget {
  static constexpr std::uint64_t kDefaultWords = 10'000'000;

  std::uint64_t words = kDefaultWords;
};

/// Throws budget_error when `requested` objects exceed the budget.
inline void require_budget(const ExactInt& requested, const EnumBudget& budget,
                           std::string_view what) {
  if (requested > ExactInt(budget.words)) {
    throw budget_error("enumeration budget exceeded: " + std::string(what) +
                       " requires " + requested.str() +
                       " objects but enum_budget is " +
                       std::to_string(budget.words));
  }
}

}  // namespace bijlab
