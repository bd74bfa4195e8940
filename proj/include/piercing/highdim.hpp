#pragma once

#include <array>
#include <optional>
#include <vector>

#include "piercing/rational.hpp"

namespace piercing {

using Triple3 = std::array<Rat, 3>;
// Grid multi-index t in {1,2,3}^d, stored 1-based as in the usual notation.
using MultiIndex = std::vector<int>;

// A base grid {x^1} x ... x {x^d} with three strictly increasing values per
// coordinate and a fiber point z_t in R^(d-1) over every grid node t. The
// lifted points P_t = (x^1_{t_1}, ..., x^d_{t_d}, z_t) live in R^(2d-1);
// family i consists of A^i_j = conv{P_t : t_i = j} for j = 1, 2, 3.
class HighDimInstance {
 public:
  /// `fibers` is indexed by code(t). Throws E_DIMENSION on wrong sizes or
  /// d < 2, E_MONOTONE if some coordinate triple is not strictly increasing.
  static HighDimInstance build(std::size_t d, std::vector<Triple3> base, std::vector<RatVec> fibers);

  std::size_t d() const { return base_.size(); }
  std::size_t ambient_dim() const { return 2 * d() - 1; }
  std::size_t num_nodes() const { return fibers_.size(); }
  const Triple3& base(std::size_t coord) const { return base_[coord]; }
  const RatVec& fiber(std::size_t node) const { return fibers_[node]; }

  /// Mixed-radix code sum_k (t_k - 1) 3^k with t_1 least significant.
  static std::size_t code(const MultiIndex& t);
  MultiIndex decode(std::size_t node) const;

  RatVec point(const MultiIndex& t) const;
  /// Generators of A^coord_value (all P_t with t_coord == value).
  std::vector<RatVec> family_generators(std::size_t coord, int value) const;

 private:
  HighDimInstance(std::vector<Triple3> base, std::vector<RatVec> fibers)
      : base_(std::move(base)), fibers_(std::move(fibers)) {}

  std::vector<Triple3> base_;
  std::vector<RatVec> fibers_;
};

// Subsets J of the d coordinates are bitmasks (bit k for coordinate k,
// 0-based); points[J] is Q_J.
struct QFamily {
  std::vector<std::pair<Rat, Rat>> alphas;  // (alpha_1, alpha_3) per coordinate
  std::vector<RatVec> points;
};

/// alpha per coordinate with x_2 = alpha_1 x_1 + alpha_3 x_3, and
/// Q_J = sum_{r in {1,3}^J} (prod_{j in J} alpha^j_{r_j}) P_{t(J, r)}, where
/// t(J, r) is r on J and 2 elsewhere.
QFamily q_family(const HighDimInstance& inst);

/// Weight prod_{j in J} alpha^j_{r_j} for r given by `high_bits` (bit set
/// means r_j = 3) restricted to J.
Rat q_weight(const QFamily& qf, unsigned subset, unsigned high_bits);

struct SplitWitness {
  std::size_t index = 0;  // 0-based coordinate i
  RatVec point;           // common point, in R^(d-1)
  std::vector<unsigned> inside_subsets;   // J with i in J, increasing
  RatVec inside_coeffs;
  std::vector<unsigned> outside_subsets;  // J without i, increasing
  RatVec outside_coeffs;
};

/// Tests conv{Q_J : i in J} ∩ conv{Q_J : i not in J} for one coordinate.
/// `points` must hold 2^d points of equal dimension. Throws E_DIMENSION.
std::optional<SplitWitness> hull_split_at(const std::vector<RatVec>& points, std::size_t index);

/// First coordinate i whose split hulls meet. Throws E_DIMENSION on bad
/// input and E_THEOREM_VIOLATION if no coordinate works.
SplitWitness split_index(const std::vector<RatVec>& points);

struct HighDimPierce {
  std::size_t index = 0;  // 0-based family index i
  RatVec p1;              // in A^i_1 and above the central line of coordinate i
  RatVec p3;              // in A^i_3, same central line
  RatVec q;               // alpha_1 p1 + alpha_3 p3, in A^i_2
  SplitWitness split;
  RatVec hull1;  // barycentric coordinates of p1 in A^i_1
  RatVec hull2;  // of q in A^i_2
  RatVec hull3;  // of p3 in A^i_3
  bool fallback_used = false;
};

/// Rebuilds the piercing segment P1-P3 from a split witness of the Q family.
/// If one side carries zero total weight, that endpoint falls back to the
/// grid node with t_i in {1, 3} and every other coordinate 2.
HighDimPierce reconstruct_line(const HighDimInstance& inst, const QFamily& qf, const SplitWitness& split);

/// Throws E_THEOREM_VIOLATION if some hull membership fails.
HighDimPierce highdim_pierce(const HighDimInstance& inst);

}  // namespace piercing
