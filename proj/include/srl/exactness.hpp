#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srl/limits.hpp"
#include "srl/matrix.hpp"

namespace srl {

enum class Property { E1, E2, F1, F2, G1, G2, H1, H2 };

std::string property_name(Property p);
Property parse_property(std::string_view name);

struct Counterexample {
  std::optional<Mat> vector;  // unseparated x (E/G)
  std::optional<Mat> matrix;  // offending B (F)
  std::string note;
};

struct CheckScope {
  std::uint32_t m = 0, n = 0;
  std::uint64_t candidates = 0;
  std::string method;
  std::uint32_t f1_row_bound = 0;  // F checks only
};

struct ExactnessVerdict {
  Property property = Property::E1;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  CheckScope scope;
};

// Every x outside row(A) is separated by a kernel pair: some v, v' with
// A*v = A*v' but x*v != x*v'. Finite semirings.
ExactnessVerdict check_E1(const Mat& a, const Limits& lim = {});
// Dual statement for column vectors outside col(A).
ExactnessVerdict check_E2(const Mat& a, const Limits& lim = {});

// ker row(A) subset of ker row(B) implies row(B) subset of row(A),
// evaluated for one pair (vacuous truth included).
bool check_F1_pair(const Mat& a, const Mat& b, const Limits& lim = {});
// The same implication quantified over every B with at most row_bound
// rows; the truncation is recorded in the verdict scope.
ExactnessVerdict check_F1(const Mat& a, std::uint32_t row_bound, const Limits& lim = {});

// Surjectivity of row(A) -> col(A)*: every right-linear functional on
// col(A) is realised by a member of row(A). Functionals are enumerated
// through their values on the generating columns, which determines them
// since the finite kinds carry global identities.
ExactnessVerdict check_G1(const Mat& a, const Limits& lim = {});

// Every right-linear functional on col(A) extends to a right-linear
// functional on the full module S^{m x 1}. Enumerates all |S|^(|S|^m)
// total functions and filters for linearity; throws budget_error when
// that space exceeds the configured budget.
ExactnessVerdict check_H1(const Mat& a, const Limits& lim = {});

struct PropertySummary {
  Property property = Property::E1;
  bool holds_for_all = true;
  std::uint64_t matrices_checked = 0;
  std::uint64_t skipped = 0;  // budget-skipped instances (H checks)
  std::optional<Mat> first_failing_matrix;
  std::optional<Counterexample> counterexample;
};

struct ExactnessReport {
  std::string semiring;
  std::uint32_t max_m = 0, max_n = 0;
  std::uint32_t f1_row_bound = 0;
  std::vector<PropertySummary> properties;
  // Pairwise agreement of the computed per-instance verdicts.
  bool agreement_ok = true;
  std::uint64_t agreement_instances = 0;
};

ExactnessReport exactness_report(const SemiringHandle& s, std::uint32_t max_m, std::uint32_t max_n,
                                 const std::vector<Property>& props, std::uint32_t f1_row_bound = 3,
                                 const Limits& lim = {});

}  // namespace srl
