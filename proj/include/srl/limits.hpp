#pragma once

#include <cstdint>

namespace srl {

// Enumeration budgets. Exceeding any of them raises budget_error rather
// than silently truncating.
struct Limits {
  // |S|^m multiplier vectors for span enumeration.
  std::uint64_t span_multipliers = 1'000'000;
  // |S|^n vectors when scanning a full vector module (kernels, E-checks,
  // orthogonal complements).
  std::uint64_t vector_space = 100'000;
  // Candidate functions when enumerating functionals (G/H checks).
  std::uint64_t function_space = 1'048'576;
  // Candidate matrices in Green's relation searches.
  std::uint64_t matrix_search = 10'000'000;
  // Sample count for randomized checks on infinite semirings.
  std::uint64_t samples = 1000;
};

}  // namespace srl
