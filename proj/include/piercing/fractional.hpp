#pragma once

#include <array>
#include <vector>

#include "piercing/scene.hpp"

namespace piercing {

// Construction of a piercing line for a 3x3 grid inside one of the two
// central planes. Heights are taken on the central vertical line
// {x = x_2, y = y_2}:
//   z_p22  grid point P_22
//   z_px   segment P_21 P_23 (inside A_2)
//   z_py   segment P_12 P_32 (inside B_2)
//   z_r    common point of the two mid-lines of the corner quadrangle
struct Lemma33Trace {
  GridInstance instance;
  Rat z_p22;
  Rat z_px;
  Rat z_py;
  Rat z_r;
  ZInterval x_test;  // [z_r, z_px] ∩ [z_p22, z_py]
  ZInterval y_test;  // [z_r, z_py] ∩ [z_p22, z_px]
  Axis axis = Axis::X;
  Rat z_star;
  Rat lambda;  // z_star = lambda*z_r + (1 - lambda)*(z_px or z_py)
  Point3 first_endpoint;  // on B_1 (axis X) or A_1 (axis Y)
  Point3 last_endpoint;   // on B_3 or A_3
  PlaneLine line;
  PierceReport report;
};

/// Throws E_DIMENSION unless the instance is 3x3, E_THEOREM_VIOLATION if
/// neither interval test succeeds or the line misses a set.
Lemma33Trace lemma33_pierce(const GridInstance& inst);

// Parallel vertical segments {abscissa} x [lo, hi] in a 2-plane.
class SegmentFamily {
 public:
  SegmentFamily() = default;
  /// Throws E_MONOTONE if abscissas are not strictly increasing and
  /// E_EMPTY for an empty interval or a size mismatch.
  SegmentFamily(RatVec abscissas, std::vector<ZInterval> intervals);

  std::size_t size() const { return abscissas_.size(); }
  const Rat& abscissa(std::size_t k) const { return abscissas_[k]; }
  const ZInterval& interval(std::size_t k) const { return intervals_[k]; }
  SegmentFamily subfamily(const std::vector<std::size_t>& indices) const;

 private:
  RatVec abscissas_;
  std::vector<ZInterval> intervals_;
};

struct StabLine {
  Rat slope;
  Rat intercept;

  Rat at(const Rat& t) const { return slope * t + intercept; }
  friend bool operator==(const StabLine&, const StabLine&) = default;
};

struct StabResult {
  StabLine line;
  std::size_t count = 0;
  std::vector<bool> stabbed;
};

using Triple = std::array<std::size_t, 3>;

/// Lexicographically sorted triples whose segments one line can stab,
/// each decided by a two-variable feasibility LP in (slope, intercept).
std::vector<Triple> stab_triples(const SegmentFamily& fam);

/// Exact maximum number of segments one line stabs, over lines through two
/// segment endpoints at distinct abscissas (a horizontal line for a single
/// segment). Ties go to the lexicographically smallest (slope, intercept).
/// Throws E_EMPTY for an empty family.
StabResult best_stab_line(const SegmentFamily& fam);

std::size_t stab_count(const SegmentFamily& fam, const StabLine& line);

/// Nonempty sections, in set order, of the family pierced by `axis` lines
/// with the plane at `plane_value`; `set_indices` receives the matching
/// set indices.
SegmentFamily plane_sections(const GridInstance& inst, Axis axis, const Rat& plane_value,
                             std::vector<std::size_t>* set_indices = nullptr);

struct FracResult {
  Axis axis = Axis::X;
  std::size_t plane_index = 0;
  PlaneLine line;
  std::size_t count = 0;
  std::vector<std::size_t> x_good;  // good triples in each plane x = x_i
  std::vector<std::size_t> y_good;  // good triples in each plane y = y_j
  Rat delta;  // max good-triple fraction over all n + m planes
  Rat alpha;  // good-triple fraction of the chosen plane
  double kalai_constant = 0;  // 1 - (1/2)^(1/3), reported only
};

Rat binomial3(std::size_t k);

/// Chooses the first plane (x-planes by index, then y-planes) whose
/// good-triple fraction is at least 1/2 and returns the best stabbing line
/// there. Throws E_DIMENSION if n < 3 or m < 3, E_THEOREM_VIOLATION if the
/// fraction or count bounds fail.
FracResult fractional_transversal(const GridInstance& inst);

}  // namespace piercing
