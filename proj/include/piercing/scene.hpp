#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "piercing/rational.hpp"

namespace piercing {

using Point3 = std::array<Rat, 3>;

/// X: the line sits in a plane of constant x and must pierce the B family.
/// Y: the line sits in a plane of constant y and must pierce the A family.
enum class Axis { X, Y };

constexpr std::string_view to_string(Axis axis) { return axis == Axis::X ? "x" : "y"; }
constexpr Axis opposite(Axis axis) { return axis == Axis::X ? Axis::Y : Axis::X; }

// Two families of vertical polygons in parallel planes, reduced to the grid
// form: P_ij = (x_i, y_j, z_ij), A_i = conv{P_ij : j} in the plane x = x_i,
// B_j = conv{P_ij : i} in the plane y = y_j. A_i and B_j share P_ij.
class GridInstance {
 public:
  /// Validates and builds an instance. Throws E_DIMENSION when Z is not
  /// n x m or a family is empty, E_MONOTONE when x or y is not strictly
  /// increasing.
  static GridInstance build(RatVec x, RatVec y, RatMat z);

  std::size_t n() const { return x_.size(); }
  std::size_t m() const { return y_.size(); }
  const RatVec& x() const { return x_; }
  const RatVec& y() const { return y_; }
  const RatMat& z() const { return z_; }
  const Rat& z(std::size_t i, std::size_t j) const { return z_[i][j]; }
  Point3 point(std::size_t i, std::size_t j) const { return {x_[i], y_[j], z_[i][j]}; }

  /// Number of sets in the family a line of the given axis must pierce.
  std::size_t family_size(Axis axis) const { return axis == Axis::X ? m() : n(); }
  /// Plane coordinates available to lines of the given axis (x for X).
  const RatVec& plane_values(Axis axis) const { return axis == Axis::X ? x_ : y_; }
  /// Coordinates along a line of the given axis where it meets the pierced
  /// family's planes (y for X).
  const RatVec& ordinates(Axis axis) const { return axis == Axis::X ? y_ : x_; }

  /// Vertices of A_i (Axis::Y family) or B_j (Axis::X family).
  std::vector<Point3> vertices(Axis axis, std::size_t set_index) const;

  friend bool operator==(const GridInstance&, const GridInstance&) = default;

 private:
  GridInstance(RatVec x, RatVec y, RatMat z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  RatVec x_;
  RatVec y_;
  RatMat z_;
};

GridInstance build_grid(RatVec x, RatVec y, RatMat z);

// A line inside the plane {x = plane_value} (axis X) carrying the points
// (plane_value, t, slope*t + intercept), or inside {y = plane_value}
// (axis Y) carrying (t, plane_value, slope*t + intercept).
struct PlaneLine {
  Axis axis = Axis::X;
  Rat plane_value;
  Rat slope;
  Rat intercept;

  Rat height_at(const Rat& t) const { return slope * t + intercept; }
  Point3 point_at(const Rat& t) const;

  friend bool operator==(const PlaneLine&, const PlaneLine&) = default;
};

class ZInterval {
 public:
  static ZInterval empty() { return ZInterval(); }
  ZInterval(Rat lo, Rat hi);

  bool is_empty() const { return empty_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool contains(const Rat& z) const { return !empty_ && lo_ <= z && z <= hi_; }
  ZInterval intersect(const ZInterval& other) const;

  friend bool operator==(const ZInterval&, const ZInterval&) = default;

 private:
  ZInterval() = default;

  bool empty_ = true;
  Rat lo_;
  Rat hi_;
};

/// z-range of conv{(abscissa_k, height_k)} on the vertical line at `at`.
/// Abscissas must be strictly increasing. Built from the upper and lower
/// hull chains of the point set.
ZInterval vertical_section(const RatVec& abscissas, const RatVec& heights, const Rat& at);

/// Cross-section of the set pierced by lines of `axis` (B_j for X, A_i for
/// Y) with the plane {x = plane_value} (resp. {y = plane_value}). Empty when
/// the plane misses the set. Throws E_INDEX for a bad set index.
ZInterval section(const GridInstance& inst, Axis axis, std::size_t set_index, const Rat& plane_value);

struct PierceReport {
  Axis axis = Axis::X;
  RatVec heights;              // line height above each pierced-family plane
  std::vector<bool> pierced;   // one entry per set of the opposite family

  bool all() const;
  std::size_t count() const;
};

/// Per-set piercing report for every set of the family opposite to line.axis.
PierceReport line_pierces(const GridInstance& inst, const PlaneLine& line);

// General (non-grid) scenes: convex polytopes given by vertices, each
// declared to lie in a plane given by a point and two spanning vectors.
struct Plane {
  Point3 point;
  Point3 span_u;
  Point3 span_v;
};

struct ConvexPiece {
  std::vector<Point3> vertices;
  Plane plane;
};

enum class Family { A, B };

struct GeneralScene {
  std::vector<ConvexPiece> family_a;
  std::vector<ConvexPiece> family_b;

  const std::vector<ConvexPiece>& family(Family f) const { return f == Family::A ? family_a : family_b; }
  /// Throws E_PLANE if a plane is degenerate or a vertex is off its plane.
  void validate() const;
};

struct Line3 {
  Point3 point;
  Point3 direction;
};

Point3 cross(const Point3& a, const Point3& b);
Rat dot(const Point3& a, const Point3& b);
bool same_plane(const Plane& a, const Plane& b);
bool on_plane(const Plane& plane, const Point3& p);
bool on_line(const Line3& line, const Point3& p);

/// A point common to both polytopes, found by a joint hull LP.
std::optional<Point3> common_point(const ConvexPiece& a, const ConvexPiece& b);

/// Searches for a line inside `plane` meeting every set of `family`.
/// Candidates are lines through two distinct vertices of the sets'
/// plane sections. Throws E_PLANE if `plane` is not one of the scene's
/// declared planes.
std::optional<Line3> general_line_transversal_in_plane(const GeneralScene& scene, const Plane& plane,
                                                       Family family);

}  // namespace piercing
