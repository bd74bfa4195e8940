#include "piercing/scene.hpp"

#include <algorithm>

#include "piercing/error.hpp"
#include "piercing/lpcore.hpp"

namespace piercing {

namespace {

void require_strictly_increasing(const RatVec& v, const char* name) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k - 1] < v[k])) {
      throw Error(ErrorCode::Monotone, std::string(name) + " is not strictly increasing at index " + std::to_string(k));
    }
  }
}

// Cross product of (b - a) and (c - a) in the (abscissa, height) plane.
Rat turn(const Rat& ax, const Rat& az, const Rat& bx, const Rat& bz, const Rat& cx, const Rat& cz) {
  return (bx - ax) * (cz - az) - (bz - az) * (cx - ax);
}

// Evaluates an x-monotone polyline (vertex indices into xs/zs) at `at`,
// which must lie within its abscissa range.
Rat chain_height(const std::vector<std::size_t>& chain, const RatVec& xs, const RatVec& zs, const Rat& at) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const std::size_t a = chain[k];
    const std::size_t b = chain[k + 1];
    if (xs[a] <= at && at <= xs[b]) return lerp_at(xs[a], zs[a], xs[b], zs[b], at);
  }
  return zs[chain.front()];
}

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_zero(const Point3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

// Coordinates (s, t) of p = plane.point + s*u + t*v, assuming p on the plane.
std::array<Rat, 2> plane_coords(const Plane& plane, const Point3& p) {
  const Point3 w = sub(p, plane.point);
  const Rat uu = dot(plane.span_u, plane.span_u);
  const Rat uv = dot(plane.span_u, plane.span_v);
  const Rat vv = dot(plane.span_v, plane.span_v);
  const Rat uw = dot(plane.span_u, w);
  const Rat vw = dot(plane.span_v, w);
  const Rat det = uu * vv - uv * uv;
  return {(uw * vv - vw * uv) / det, (uu * vw - uv * uw) / det};
}

Point3 from_plane_coords(const Plane& plane, const Rat& s, const Rat& t) {
  Point3 out;
  for (int k = 0; k < 3; ++k) out[k] = plane.point[k] + s * plane.span_u[k] + t * plane.span_v[k];
  return out;
}

// Vertices (in plane coordinates) generating conv(piece) ∩ plane: vertices
// on the plane and crossings of every vertex pair straddling it.
std::vector<std::array<Rat, 2>> plane_section(const ConvexPiece& piece, const Plane& plane) {
  const Point3 normal = cross(plane.span_u, plane.span_v);
  const Rat offset = dot(normal, plane.point);
  std::vector<Rat> side;
  side.reserve(piece.vertices.size());
  for (const Point3& vtx : piece.vertices) side.push_back(dot(normal, vtx) - offset);

  std::vector<std::array<Rat, 2>> out;
  auto push_unique = [&](const Point3& p) {
    auto coords = plane_coords(plane, p);
    if (std::find(out.begin(), out.end(), coords) == out.end()) out.push_back(std::move(coords));
  };
  for (std::size_t a = 0; a < piece.vertices.size(); ++a) {
    if (side[a] == 0) push_unique(piece.vertices[a]);
    for (std::size_t b = a + 1; b < piece.vertices.size(); ++b) {
      if (sgn(side[a]) * sgn(side[b]) >= 0) continue;
      const Rat t = side[a] / (side[a] - side[b]);
      Point3 crossing;
      for (int k = 0; k < 3; ++k) crossing[k] = piece.vertices[a][k] + t * (piece.vertices[b][k] - piece.vertices[a][k]);
      push_unique(crossing);
    }
  }
  return out;
}

}  // namespace

GridInstance GridInstance::build(RatVec x, RatVec y, RatMat z) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::Dimension, "grid needs n >= 1 and m >= 1");
  if (z.size() != x.size()) {
    throw Error(ErrorCode::Dimension, "Z has " + std::to_string(z.size()) + " rows, expected n = " + std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].size() != y.size()) {
      throw Error(ErrorCode::Dimension, "Z row " + std::to_string(i) + " has " + std::to_string(z[i].size()) +
                                            " entries, expected m = " + std::to_string(y.size()));
    }
  }
  require_strictly_increasing(x, "x");
  require_strictly_increasing(y, "y");
  return GridInstance(std::move(x), std::move(y), std::move(z));
}

GridInstance build_grid(RatVec x, RatVec y, RatMat z) { return GridInstance::build(std::move(x), std::move(y), std::move(z)); }

std::vector<Point3> GridInstance::vertices(Axis axis, std::size_t set_index) const {
  std::vector<Point3> out;
  if (axis == Axis::X) {
    for (std::size_t i = 0; i < n(); ++i) out.push_back(point(i, set_index));
  } else {
    for (std::size_t j = 0; j < m(); ++j) out.push_back(point(set_index, j));
  }
  return out;
}

Point3 PlaneLine::point_at(const Rat& t) const {
  if (axis == Axis::X) return {plane_value, t, height_at(t)};
  return {t, plane_value, height_at(t)};
}

ZInterval::ZInterval(Rat lo, Rat hi) : empty_(false), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error(ErrorCode::Dimension, "interval with hi < lo");
}

ZInterval ZInterval::intersect(const ZInterval& other) const {
  if (empty_ || other.empty_) return empty();
  const Rat& lo = std::max(lo_, other.lo_);
  const Rat& hi = std::min(hi_, other.hi_);
  if (hi < lo) return empty();
  return ZInterval(lo, hi);
}

ZInterval vertical_section(const RatVec& xs, const RatVec& zs, const Rat& at) {
  if (xs.empty() || xs.size() != zs.size()) throw Error(ErrorCode::Dimension, "vertical_section needs matching, nonempty inputs");
  if (at < xs.front() || xs.back() < at) return ZInterval::empty();

  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    while (lower.size() >= 2) {
      const std::size_t a = lower[lower.size() - 2];
      const std::size_t b = lower.back();
      if (turn(xs[a], zs[a], xs[b], zs[b], xs[k], zs[k]) > 0) break;
      lower.pop_back();
    }
    lower.push_back(k);
    while (upper.size() >= 2) {
      const std::size_t a = upper[upper.size() - 2];
      const std::size_t b = upper.back();
      if (turn(xs[a], zs[a], xs[b], zs[b], xs[k], zs[k]) < 0) break;
      upper.pop_back();
    }
    upper.push_back(k);
  }
  return ZInterval(chain_height(lower, xs, zs, at), chain_height(upper, xs, zs, at));
}

ZInterval section(const GridInstance& inst, Axis axis, std::size_t set_index, const Rat& plane_value) {
  const std::size_t count = inst.family_size(axis);
  if (set_index >= count) {
    throw Error(ErrorCode::Index, "set index " + std::to_string(set_index) + " out of range [0, " + std::to_string(count) + ")");
  }
  const RatVec& abscissas = inst.plane_values(axis);
  RatVec heights(abscissas.size());
  for (std::size_t k = 0; k < abscissas.size(); ++k) {
    heights[k] = axis == Axis::X ? inst.z(k, set_index) : inst.z(set_index, k);
  }
  return vertical_section(abscissas, heights, plane_value);
}

bool PierceReport::all() const { return std::all_of(pierced.begin(), pierced.end(), [](bool b) { return b; }); }

std::size_t PierceReport::count() const { return static_cast<std::size_t>(std::count(pierced.begin(), pierced.end(), true)); }

PierceReport line_pierces(const GridInstance& inst, const PlaneLine& line) {
  PierceReport report;
  report.axis = line.axis;
  const RatVec& ords = inst.ordinates(line.axis);
  for (std::size_t k = 0; k < ords.size(); ++k) {
    Rat h = line.height_at(ords[k]);
    report.pierced.push_back(section(inst, line.axis, k, line.plane_value).contains(h));
    report.heights.push_back(std::move(h));
  }
  return report;
}

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool on_plane(const Plane& plane, const Point3& p) {
  return dot(cross(plane.span_u, plane.span_v), sub(p, plane.point)) == 0;
}

bool same_plane(const Plane& a, const Plane& b) {
  const Point3 na = cross(a.span_u, a.span_v);
  const Point3 nb = cross(b.span_u, b.span_v);
  if (is_zero(na) || is_zero(nb)) return false;
  return is_zero(cross(na, nb)) && on_plane(a, b.point);
}

bool on_line(const Line3& line, const Point3& p) { return is_zero(cross(line.direction, sub(p, line.point))); }

void GeneralScene::validate() const {
  auto check = [](const std::vector<ConvexPiece>& fam, const char* name) {
    for (std::size_t k = 0; k < fam.size(); ++k) {
      const ConvexPiece& piece = fam[k];
      if (is_zero(cross(piece.plane.span_u, piece.plane.span_v))) {
        throw Error(ErrorCode::Plane, std::string(name) + std::to_string(k + 1) + " has a degenerate plane descriptor");
      }
      if (piece.vertices.empty()) throw Error(ErrorCode::Plane, std::string(name) + std::to_string(k + 1) + " has no vertices");
      for (const Point3& v : piece.vertices) {
        if (!on_plane(piece.plane, v)) {
          throw Error(ErrorCode::Plane, std::string(name) + std::to_string(k + 1) + " has a vertex off its declared plane");
        }
      }
    }
  };
  check(family_a, "A");
  check(family_b, "B");
}

std::optional<Point3> common_point(const ConvexPiece& a, const ConvexPiece& b) {
  // Variables: lambda over a's vertices then mu over b's vertices.
  const std::size_t na = a.vertices.size();
  const std::size_t nb = b.vertices.size();
  LinearSystem sys;
  sys.num_vars = na + nb;
  for (int axis = 0; axis < 3; ++axis) {
    RatVec row = zeros(na + nb);
    for (std::size_t k = 0; k < na; ++k) row[k] = a.vertices[k][axis];
    for (std::size_t k = 0; k < nb; ++k) row[na + k] = -b.vertices[k][axis];
    sys.add_eq(std::move(row), 0);
  }
  RatVec sum_a = zeros(na + nb);
  RatVec sum_b = zeros(na + nb);
  for (std::size_t k = 0; k < na; ++k) sum_a[k] = 1;
  for (std::size_t k = 0; k < nb; ++k) sum_b[na + k] = 1;
  sys.add_eq(std::move(sum_a), 1);
  sys.add_eq(std::move(sum_b), 1);
  for (std::size_t k = 0; k < na + nb; ++k) {
    RatVec row = zeros(na + nb);
    row[k] = 1;
    sys.add_ge(std::move(row), 0);
  }
  FeasOutcome out = solve_feasibility(sys);
  if (!out.is_feasible()) return std::nullopt;
  Point3 p{Rat(0), Rat(0), Rat(0)};
  for (std::size_t k = 0; k < na; ++k) {
    for (int axis = 0; axis < 3; ++axis) p[axis] += out.point()[k] * a.vertices[k][axis];
  }
  return p;
}

std::optional<Line3> general_line_transversal_in_plane(const GeneralScene& scene, const Plane& plane, Family family) {
  scene.validate();
  auto declared = [&](const std::vector<ConvexPiece>& fam) {
    return std::any_of(fam.begin(), fam.end(), [&](const ConvexPiece& p) { return same_plane(p.plane, plane); });
  };
  if (!declared(scene.family_a) && !declared(scene.family_b)) {
    throw Error(ErrorCode::Plane, "query plane is not one of the scene's declared planes");
  }

  using P2 = std::array<Rat, 2>;
  std::vector<std::vector<P2>> sections;
  std::vector<P2> candidates;
  for (const ConvexPiece& piece : scene.family(family)) {
    auto sec = plane_section(piece, plane);
    if (sec.empty()) return std::nullopt;
    for (const P2& p : sec) {
      if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
    }
    sections.push_back(std::move(sec));
  }
  if (sections.empty()) return Line3{plane.point, plane.span_u};

  auto lift = [&](const P2& p, const P2& dir) {
    Point3 base = from_plane_coords(plane, p[0], p[1]);
    Point3 d;
    for (int k = 0; k < 3; ++k) d[k] = dir[0] * plane.span_u[k] + dir[1] * plane.span_v[k];
    return Line3{base, d};
  };
  if (candidates.size() == 1) return lift(candidates.front(), {Rat(1), Rat(0)});

  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const P2& p = candidates[a];
      const P2 dir{candidates[b][0] - p[0], candidates[b][1] - p[1]};
      const bool meets_all = std::all_of(sections.begin(), sections.end(), [&](const std::vector<P2>& sec) {
        bool below = false;
        bool above = false;
        for (const P2& r : sec) {
          const int s = sgn(dir[0] * (r[1] - p[1]) - dir[1] * (r[0] - p[0]));
          below = below || s <= 0;
          above = above || s >= 0;
        }
        return below && above;
      });
      if (meets_all) return lift(p, dir);
    }
  }
  return std::nullopt;
}

}  // namespace piercing
