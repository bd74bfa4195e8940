#pragma once

#include <optional>
#include <string>

#include "piercing/lpcore.hpp"
#include "piercing/scene.hpp"

namespace piercing {

// Variable layout of the primal piercing system for either axis:
// beta_ij at i*m + j, then slope, plane coordinate, intercept.
struct PrimalLayout {
  std::size_t n = 0;
  std::size_t m = 0;

  std::size_t beta(std::size_t i, std::size_t j) const { return i * m + j; }
  std::size_t slope() const { return n * m; }
  std::size_t plane() const { return n * m + 1; }
  std::size_t intercept() const { return n * m + 2; }
  std::size_t num_vars() const { return n * m + 3; }
};

/// Linear system whose solutions are exactly the piercing lines of `axis`
/// together with barycentric witnesses. For axis X (k = m rows per block):
///   eq rows [0, m):    sum_i beta_ij x_i - x0 = 0
///   eq rows [m, 2m):   sum_i beta_ij z_ij - a y_j - z0 = 0
///   eq rows [2m, 3m):  sum_i beta_ij = 1
///   ge rows (i*m + j): beta_ij >= 0
/// Axis Y swaps the roles of (i, x) and (j, y); blocks then have n rows.
LinearSystem build_primal(const GridInstance& inst, Axis axis);

struct BaryWitness {
  Axis axis = Axis::X;
  RatMat beta;  // n x m; columns sum to 1 for axis X, rows for axis Y
};

struct PiercingResult {
  Axis axis = Axis::X;
  PlaneLine line;
  BaryWitness witness;
  PierceReport report;
};

/// Solves the primal system of one axis; nullopt when it is infeasible.
std::optional<PiercingResult> solve_axis(const GridInstance& inst, Axis axis);

/// Tries axis X, then axis Y. Throws E_THEOREM_VIOLATION if neither
/// system is feasible or the returned line fails line_pierces.
PiercingResult find_piercing_line(const GridInstance& inst);

// Dual multipliers (u1, u2, u3) for side X, each of length m, or
// (v1, v2, v3) for side Y, each of length n.
struct DualCertificate {
  Axis side = Axis::X;
  RatVec row1;
  RatVec row2;
  RatVec row3;

  friend bool operator==(const DualCertificate&, const DualCertificate&) = default;
};

/// Maps the Farkas certificate of the infeasible primal of `axis` onto the
/// dual variables. With y1, y2, y3 the multipliers of the three equality
/// blocks, the certificate is u = -y / sum(y3), so sum(u3) = -1.
/// Throws E_FEASIBLE if the primal is feasible.
DualCertificate extract_dual_certificate(const GridInstance& inst, Axis axis);

/// Side X:  u1_j x_i + u2_j z_ij + u3_j >= 0 for all i, j;  sum u2_j y_j = 0;
///          sum u1 = 0;  sum u2 = 0;  sum u3 < 0.
/// Side Y symmetric with (v, y_j) in place of (u, x_i).
/// Throws E_DIMENSION when the rows do not match the instance.
bool verify_dual_certificate(const GridInstance& inst, const DualCertificate& cert);

enum class CombinedRow {
  XBeta,
  YBeta,
  XA,
  YA,
  XX0,
  YX0,
  XZ0,
  YZ0,
  XInfeasible,
  YInfeasible,
};

struct ViolatedRow {
  CombinedRow kind = CombinedRow::XInfeasible;
  std::size_t i = 0;  // meaningful for the beta rows only
  std::size_t j = 0;

  std::string label() const;
};

enum class LedgerBranch {
  NotReached,  // some linear row of the combined system already fails
  PartSum,     // part1 = part2 = 0 and part3 + part4 < 0
  V2Zero,      // v2 == 0: the (y:beta) rows of a column sum to sum(v3) < 0
  U2Zero,      // u2 == 0: the (x:beta) rows of a row sum to sum(u3) < 0
};

std::string_view to_string(LedgerBranch branch);

// Bookkeeping of the weighted-sum refutation of the combined system.
// Primed values: x'_i = v2_i x_i, y'_j = u2_j y_j, z'_ij = u2_j v2_i z_ij.
// I+/I- split i by the sign of v2_i, J+/J- split j by the sign of u2_j.
struct ContradictionLedger {
  RatVec x_primed;
  RatVec y_primed;
  RatMat z_primed;
  std::vector<std::size_t> i_plus;
  std::vector<std::size_t> i_minus;
  std::vector<std::size_t> j_plus;
  std::vector<std::size_t> j_minus;

  Rat u1_plus, u1_minus;  // over J+/J-
  Rat x_plus, x_minus;    // x' over I+/I-
  Rat v1_plus, v1_minus;  // over I+/I-
  Rat y_plus, y_minus;    // y' over J+/J-
  Rat v2_plus, v2_minus;  // over I+/I-
  Rat u3_plus, u3_minus;  // over J+/J-
  Rat u2_plus, u2_minus;  // over J+/J-
  Rat v3_plus, v3_minus;  // over I+/I-

  // part1 = u1- x+ - u1+ x-          part2 = v1- y+ - v1+ y-
  // part3 = v2+ u3- - v2- u3+        part4 = u2+ v3- - u2- v3+
  Rat part1, part2, part3, part4;
  // Sum of the paired inequalities over I+ x J- and I- x J+, evaluated
  // term by term; equals part1 + part2 + part3 + part4.
  Rat pair_sum;

  bool linear_rows_hold = false;
  LedgerBranch branch = LedgerBranch::NotReached;
  ViolatedRow violated;
};

/// Evaluates the combined bilinear system in (x, y, Z, U, V) and returns
/// the ledger naming a violated constraint. The linear rows are checked
/// first in the order (x:a), (y:a), (x:x0), (y:x0), (x:z0), (y:z0),
/// (x:infeasible), (y:infeasible); when all hold, the ledger locates a
/// violated (x:beta) or (y:beta) row. Throws E_DIMENSION on shape
/// mismatch and E_THEOREM_VIOLATION if no violated row can be found.
ContradictionLedger check_combined(const RatVec& x, const RatVec& y, const RatMat& z, const DualCertificate& u,
                                   const DualCertificate& v);

}  // namespace piercing
