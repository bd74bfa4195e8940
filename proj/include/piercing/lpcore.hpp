#pragma once

#include <optional>
#include <variant>

#include "piercing/rational.hpp"

namespace piercing {

struct LinearRow {
  RatVec coeffs;
  Rat rhs;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

// Feasibility problem over free (unrestricted) variables:
//   eq_rows[r].coeffs . v == eq_rows[r].rhs
//   ge_rows[r].coeffs . v >= ge_rows[r].rhs
// Row order is significant; certificates refer to rows by index.
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearRow> eq_rows;
  std::vector<LinearRow> ge_rows;

  std::size_t add_eq(RatVec coeffs, Rat rhs);
  std::size_t add_ge(RatVec coeffs, Rat rhs);
};

// Multipliers for a one-line refutation of a LinearSystem:
//   sum_r eq_mults[r]*eq_rows[r] + sum_r ge_mults[r]*ge_rows[r]
// has an all-zero coefficient vector while its rhs is strictly positive,
// with every ge multiplier nonnegative.
struct FarkasCert {
  RatVec eq_mults;
  RatVec ge_mults;

  friend bool operator==(const FarkasCert&, const FarkasCert&) = default;
};

class FeasOutcome {
 public:
  static FeasOutcome feasible(RatVec point) { return FeasOutcome(std::move(point)); }
  static FeasOutcome infeasible(FarkasCert cert) { return FeasOutcome(std::move(cert)); }

  bool is_feasible() const { return std::holds_alternative<RatVec>(value_); }
  const RatVec& point() const { return std::get<RatVec>(value_); }
  const FarkasCert& cert() const { return std::get<FarkasCert>(value_); }

  friend bool operator==(const FeasOutcome&, const FeasOutcome&) = default;

 private:
  explicit FeasOutcome(RatVec point) : value_(std::move(point)) {}
  explicit FeasOutcome(FarkasCert cert) : value_(std::move(cert)) {}

  std::variant<RatVec, FarkasCert> value_;
};

/// Decides feasibility exactly with a phase-1 simplex under Bland's rule.
/// A feasible answer carries a point satisfying every row; an infeasible
/// answer carries an integer-scaled Farkas certificate read off the final
/// phase-1 tableau. Identical input gives identical output.
/// Throws Error(E_DIMENSION) if some row length differs from num_vars.
FeasOutcome solve_feasibility(const LinearSystem& sys);

/// True iff cert refutes sys: ge multipliers nonnegative, the combined
/// coefficient row vanishes, and the combined rhs is strictly positive.
/// Throws Error(E_DIMENSION) on multiplier-count or row-length mismatch.
bool verify_farkas(const LinearSystem& sys, const FarkasCert& cert);

/// True iff point satisfies every row of sys exactly.
bool satisfies(const LinearSystem& sys, const RatVec& point);

/// Barycentric coordinates of q with respect to pts (lambda >= 0,
/// sum lambda = 1, sum lambda_k pts[k] = q), or nullopt if q lies outside
/// conv(pts).
std::optional<RatVec> point_in_hull(const RatVec& q, const std::vector<RatVec>& pts);

}  // namespace piercing
