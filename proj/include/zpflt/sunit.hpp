#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zpflt/number_field.hpp"

namespace zpflt {

struct SearchConfig {
  long height = 1;       // max |coordinate| of the numerator of lambda
  long denom_bound = 1;  // max exponent e in lambda = numerator / 2^e

  void validate() const;
};

/// Valuation classes of a solution (lambda, mu) at q = 2*O:
///   i: (1, 0), ii: (0, 1), iii: (-1, -1), unit_unit: (0, 0).
enum class SolutionClass { i, ii, iii, unit_unit, other };

std::string_view to_string(SolutionClass c);

struct SUnitSolution {
  FieldElement lambda;
  FieldElement mu;
  long ord_lambda = 0;
  long ord_mu = 0;
  SolutionClass cls = SolutionClass::other;
  bool in_box = true;  // false for members added by the symmetry closure
};

struct SearchResult {
  /// Box solutions closed under (l, m) -> (m, l) and (l, m) -> (1/l, -m/l),
  /// sorted by lambda.
  std::vector<SUnitSolution> solutions;
  std::size_t box_count = 0;
  /// lambda of closure members lying outside the search box
  std::vector<std::string> escaped;
  /// closure images that left the working ring Z[theta][1/2]
  std::vector<std::string> unrepresentable;
  std::uint64_t candidates = 0;
  std::vector<std::uint64_t> screening_primes;
};

SolutionClass classify_solution(long ord_lambda, long ord_mu);
inline SolutionClass classify_solution(const SUnitSolution& s) { return classify_solution(s.ord_lambda, s.ord_mu); }

/// lambda + mu = 1 in units of Z[theta]; lambda integral with coordinates
/// bounded by height. Requires degree >= 2.
SearchResult enumerate_unit_solutions(const FieldPtr& field, long height);

/// lambda + mu = 1 in S-units for S = {2*O}; requires 2 inert.
SearchResult enumerate_sunit_solutions(const FieldPtr& field, const InertPrimeContext& ctx, const SearchConfig& config);

struct CriterionCheck {
  long max_abs_ord;
  long ord_sum_mod3;
  bool bounded;    // max(|ord lambda|, |ord mu|) <= 4
  bool congruent;  // ord(lambda * mu) == 1 (mod 3)
  bool pass() const { return bounded && congruent; }
};

struct CriterionReport {
  std::vector<CriterionCheck> per_solution;
  bool all_pass = true;
};

/// The valuation conditions an S-unit solution must meet for the
/// asymptotic-FLT criterion with S = {2*O}.
CriterionCheck check_criterion(const SUnitSolution& s);
CriterionReport check_criterion_conditions(std::span<const SUnitSolution> solutions);

}  // namespace zpflt
