#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "movcone/errors.hpp"

namespace movcone {

inline constexpr std::uint64_t kDefaultWordBudget = 1'000'000;
inline constexpr const char* kWordBudgetEnv = "MOVCONE_WORD_BUDGET";

/// Global enumeration cap, overridable through MOVCONE_WORD_BUDGET.
inline std::uint64_t word_budget() {
  const char* raw = std::getenv(kWordBudgetEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultWordBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw ParameterError(std::string(kWordBudgetEnv) + " must be a positive integer, got '" + raw + "'");
  return v;
}

/// Number of words of length <= depth over an alphabet of `letters` letters
/// in which every letter has exactly one forbidden successor (itself for
/// involutions, its inverse for free generators). Saturates at UINT64_MAX.
inline std::uint64_t count_reduced_words(std::uint64_t letters, std::uint64_t depth, bool include_empty) {
  if (letters == 0) return include_empty ? 1 : 0;
  std::uint64_t total = include_empty ? 1 : 0;
  std::uint64_t level = letters;
  for (std::uint64_t l = 1; l <= depth; ++l) {
    if (total > UINT64_MAX - level) return UINT64_MAX;
    total += level;
    if (l < depth) {
      if (letters > 1 && level > UINT64_MAX / (letters - 1)) return UINT64_MAX;
      level *= letters - 1;
    }
  }
  return total;
}

inline void check_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what) {
  if (needed > budget)
    throw BudgetExceeded(what + " needs " + std::to_string(needed) + " words, budget is " + std::to_string(budget));
}

}  // namespace movcone
