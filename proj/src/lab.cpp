#include "piercing/lab.hpp"

#include <algorithm>
#include <limits>

#include "piercing/error.hpp"

namespace piercing {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  SplitMix64 mix(base ^ (k * 0xD1B54A32D192ED03ULL));
  return mix.next();
}

void GenConfig::validate() const {
  if (denominator_bound < 1) throw Error(ErrorCode::Config, "denominator bound D must be >= 1");
  if (numerator_bound < 1) throw Error(ErrorCode::Config, "numerator bound M must be >= 1");
}

Rat random_rational(SplitMix64& rng, const GenConfig& cfg) {
  const std::int64_t num = rng.uniform(-cfg.numerator_bound, cfg.numerator_bound);
  const std::int64_t den = rng.uniform(1, cfg.denominator_bound);
  Rat q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

RatVec random_increasing(SplitMix64& rng, const GenConfig& cfg, std::size_t count, std::size_t* rejections) {
  RatVec out;
  std::size_t rejected = 0;
  const std::size_t budget = 1000 + 100 * count;
  while (out.size() < count) {
    Rat q = random_rational(rng, cfg);
    if (std::find(out.begin(), out.end(), q) != out.end()) {
      if (++rejected > budget) {
        throw Error(ErrorCode::Config, "cannot draw " + std::to_string(count) + " distinct values with M = " +
                                           std::to_string(cfg.numerator_bound) + ", D = " + std::to_string(cfg.denominator_bound));
      }
      continue;
    }
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  if (rejections) *rejections += rejected;
  return out;
}

GridInstance random_grid(const GenConfig& cfg) {
  cfg.validate();
  if (cfg.n < 1 || cfg.m < 1) throw Error(ErrorCode::Config, "grid needs n >= 1 and m >= 1");
  SplitMix64 rng(cfg.seed);
  RatVec x = random_increasing(rng, cfg, cfg.n);
  RatVec y = random_increasing(rng, cfg, cfg.m);
  RatMat z(cfg.n, RatVec(cfg.m));
  for (auto& row : z) {
    for (Rat& q : row) q = random_rational(rng, cfg);
  }
  return GridInstance::build(std::move(x), std::move(y), std::move(z));
}

HighDimInstance random_highdim(const GenConfig& cfg) {
  cfg.validate();
  if (cfg.d < 2 || cfg.d > 10) throw Error(ErrorCode::Config, "high-dimensional generator needs 2 <= d <= 10");
  SplitMix64 rng(cfg.seed);
  std::vector<Triple3> base;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    RatVec v = random_increasing(rng, cfg, 3);
    base.push_back({v[0], v[1], v[2]});
  }
  std::size_t nodes = 1;
  for (std::size_t k = 0; k < cfg.d; ++k) nodes *= 3;
  std::vector<RatVec> fibers(nodes, RatVec(cfg.d - 1));
  for (auto& f : fibers) {
    for (Rat& q : f) q = random_rational(rng, cfg);
  }
  return HighDimInstance::build(cfg.d, std::move(base), std::move(fibers));
}

std::vector<RatVec> random_subset_points(const GenConfig& cfg) {
  cfg.validate();
  if (cfg.d < 1 || cfg.d > 16) throw Error(ErrorCode::Config, "subset point generator needs 1 <= d <= 16");
  SplitMix64 rng(cfg.seed);
  std::vector<RatVec> points(std::size_t{1} << cfg.d, RatVec(cfg.d - 1));
  for (auto& p : points) {
    for (Rat& q : p) q = random_rational(rng, cfg);
  }
  return points;
}

SegmentFamily random_segment_family(SplitMix64& rng, const GenConfig& cfg, std::size_t size) {
  RatVec at = random_increasing(rng, cfg, size);
  std::vector<ZInterval> spans;
  for (std::size_t k = 0; k < size; ++k) {
    Rat a = random_rational(rng, cfg);
    Rat b = random_rational(rng, cfg);
    spans.push_back(a <= b ? ZInterval(a, b) : ZInterval(b, a));
  }
  return SegmentFamily(std::move(at), std::move(spans));
}

namespace {

Rat sum_of(const RatVec& v) {
  Rat acc = 0;
  for (const Rat& q : v) acc += q;
  return acc;
}

// Nonzero vector w with sum w = 0 and w . coords = 0. Needs at least three
// distinct coordinates; free entries 2.. are random and entries 0, 1 solve
// the 2x2 system (its determinant coords[1] - coords[0] is nonzero).
RatVec null_space_sample(SplitMix64& rng, const GenConfig& cfg, const RatVec& coords, std::size_t& rejections) {
  const std::size_t k = coords.size();
  for (;;) {
    RatVec w(k);
    Rat s0 = 0;
    Rat s1 = 0;
    for (std::size_t a = 2; a < k; ++a) {
      w[a] = random_rational(rng, cfg);
      s0 += w[a];
      s1 += w[a] * coords[a];
    }
    w[1] = (coords[0] * s0 - s1) / (coords[1] - coords[0]);
    w[0] = -s0 - w[1];
    if (std::any_of(w.begin(), w.end(), [](const Rat& q) { return q != 0; })) return w;
    ++rejections;
  }
}

RatVec sum_zero_sample(SplitMix64& rng, const GenConfig& cfg, std::size_t k) {
  RatVec w(k);
  for (std::size_t a = 0; a + 1 < k; ++a) w[a] = random_rational(rng, cfg);
  w[k - 1] = 0;
  w[k - 1] = -sum_of(w);
  return w;
}

// Random entries shifted uniformly so they sum to exactly -1.
RatVec sum_minus_one_sample(SplitMix64& rng, const GenConfig& cfg, std::size_t k) {
  RatVec w(k);
  for (Rat& q : w) q = random_rational(rng, cfg);
  const Rat shift = (sum_of(w) + 1) / Rat(static_cast<long>(k));
  for (Rat& q : w) q -= shift;
  return w;
}

}  // namespace

FuzzReport fuzz_combined(const GenConfig& cfg, FuzzOptions options) {
  cfg.validate();
  if (cfg.n < 2 || cfg.m < 2) throw Error(ErrorCode::Config, "combined-system fuzzing needs n >= 2 and m >= 2");
  if (!options.zero_u2 && cfg.m < 3) {
    throw Error(ErrorCode::Config, "m = 2: the null space of {1, y} is trivial, no nonzero u2 exists");
  }
  if (!options.zero_v2 && cfg.n < 3) {
    throw Error(ErrorCode::Config, "n = 2: the null space of {1, x} is trivial, no nonzero v2 exists");
  }

  SplitMix64 rng(cfg.seed);
  FuzzSample s;
  s.seed = cfg.seed;
  s.x = random_increasing(rng, cfg, cfg.n, &s.rejections);
  s.y = random_increasing(rng, cfg, cfg.m, &s.rejections);
  s.z.assign(cfg.n, RatVec(cfg.m));
  for (auto& row : s.z) {
    for (Rat& q : row) q = random_rational(rng, cfg);
  }

  s.u.side = Axis::X;
  s.u.row1 = sum_zero_sample(rng, cfg, cfg.m);
  s.u.row2 = options.zero_u2 ? zeros(cfg.m) : null_space_sample(rng, cfg, s.y, s.rejections);
  s.u.row3 = sum_minus_one_sample(rng, cfg, cfg.m);
  s.v.side = Axis::Y;
  s.v.row1 = sum_zero_sample(rng, cfg, cfg.n);
  s.v.row2 = options.zero_v2 ? zeros(cfg.n) : null_space_sample(rng, cfg, s.x, s.rejections);
  s.v.row3 = sum_minus_one_sample(rng, cfg, cfg.n);

  ContradictionLedger ledger = check_combined(s.x, s.y, s.z, s.u, s.v);
  if (!ledger.linear_rows_hold) {
    throw Error(ErrorCode::TheoremViolation, "sampler produced (U, V) violating a linear row: " + ledger.violated.label());
  }
  return FuzzReport{std::move(s), std::move(ledger)};
}

GeneralScene counterexample_scene() {
  const Rat z0(0);
  const Point3 x11{Rat(1), Rat(1), z0};
  const Point3 x31{Rat(3), Rat(1), z0};
  const Point3 x13{Rat(1), Rat(3), z0};
  const Point3 x35{Rat(3), Rat(5), Rat(1)};
  const Point3 x22{Rat(2), Rat(2), Rat(1, 7)};
  // Quadrangle x11-x13-x35-x31 cut by the plane x = 2 (edges x11-x31 and
  // x13-x35) and by the plane y = 2 (edges x11-x13 and x31-x35).
  const Point3 la_first{Rat(2), Rat(1), z0};
  const Point3 la_last{Rat(2), Rat(4), Rat(1, 2)};
  const Point3 lb_first{Rat(1), Rat(2), z0};
  const Point3 lb_last{Rat(3), Rat(2), Rat(1, 4)};

  const Point3 e_x{Rat(1), z0, z0};
  const Point3 e_y{z0, Rat(1), z0};
  const Point3 e_z{z0, z0, Rat(1)};
  auto x_plane = [&](long c) { return Plane{{Rat(c), z0, z0}, e_y, e_z}; };
  auto y_plane = [&](long c) { return Plane{{z0, Rat(c), z0}, e_x, e_z}; };

  GeneralScene scene;
  scene.family_a = {
      {{x11, x13}, x_plane(1)},
      {{la_first, la_last, x22}, x_plane(2)},
      {{x31, x35}, x_plane(3)},
  };
  scene.family_b = {
      {{x11, x31}, y_plane(1)},
      {{lb_first, lb_last, x22}, y_plane(2)},
      {{x13, x35}, Plane{x13, {Rat(1), Rat(1), z0}, e_z}},
  };
  return scene;
}

bool CounterexampleReport::holds() const {
  return intersections.size() == 9 &&
         std::all_of(intersections.begin(), intersections.end(), [](const auto& p) { return p.has_value(); }) &&
         !line_in_b2_plane && !line_in_a2_plane;
}

CounterexampleReport regress_counterexample() {
  const GeneralScene scene = counterexample_scene();
  scene.validate();
  CounterexampleReport report;
  for (const ConvexPiece& a : scene.family_a) {
    for (const ConvexPiece& b : scene.family_b) report.intersections.push_back(common_point(a, b));
  }
  report.line_in_b2_plane = general_line_transversal_in_plane(scene, scene.family_b[1].plane, Family::A);
  report.line_in_a2_plane = general_line_transversal_in_plane(scene, scene.family_a[1].plane, Family::B);
  return report;
}

PlaneStab oracle_best_plane_line(const GridInstance& inst, Axis axis, const Rat& plane_value) {
  const SegmentFamily fam = plane_sections(inst, axis, plane_value);
  if (fam.size() == 0) throw Error(ErrorCode::Empty, "every section at this plane is empty");
  const StabResult best = best_stab_line(fam);
  return PlaneStab{PlaneLine{axis, plane_value, best.line.slope, best.line.intercept}, best.count};
}

}  // namespace piercing
