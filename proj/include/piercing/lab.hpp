#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "piercing/fractional.hpp"
#include "piercing/highdim.hpp"
#include "piercing/scene.hpp"
#include "piercing/transversal.hpp"

namespace piercing {

// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter advanced by the
// golden-ratio increment and passed through a fixed finalizer. The output
// sequence for a seed is part of the reproducibility contract of every
// generator below; do not change the constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] by rejection (no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Seed of the k-th run of a sweep started at `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k);

struct GenConfig {
  std::size_t n = 3;
  std::size_t m = 3;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::int64_t denominator_bound = 20;  // D
  std::int64_t numerator_bound = 20;    // M

  /// Throws E_CONFIG unless D >= 1 and M >= 1.
  void validate() const;
};

/// Numerator uniform in [-M, M], denominator uniform in [1, D], reduced.
Rat random_rational(SplitMix64& rng, const GenConfig& cfg);

/// `count` distinct random rationals in increasing order; duplicates are
/// redrawn and tallied in `rejections`. Throws E_CONFIG if the value range
/// is too small to supply them.
RatVec random_increasing(SplitMix64& rng, const GenConfig& cfg, std::size_t count, std::size_t* rejections = nullptr);

/// Throws E_CONFIG on an invalid configuration or n, m < 1.
GridInstance random_grid(const GenConfig& cfg);
HighDimInstance random_highdim(const GenConfig& cfg);
/// 2^d random points in R^(d-1), indexed by subset bitmask.
std::vector<RatVec> random_subset_points(const GenConfig& cfg);
/// A family of `size` segments with increasing abscissas and random spans.
SegmentFamily random_segment_family(SplitMix64& rng, const GenConfig& cfg, std::size_t size);

struct FuzzOptions {
  bool zero_u2 = false;
  bool zero_v2 = false;
};

// Grid data plus (U, V) satisfying every linear row of the combined system:
// sum u2_j y_j = 0, sum v2_i x_i = 0, sum u1 = sum v1 = sum u2 = sum v2 = 0,
// sum u3 = sum v3 = -1.
struct FuzzSample {
  RatVec x;
  RatVec y;
  RatMat z;
  DualCertificate u;
  DualCertificate v;
  std::uint64_t seed = 0;
  std::size_t rejections = 0;
};

struct FuzzReport {
  FuzzSample sample;
  ContradictionLedger ledger;
};

/// Draws one sample and refutes it with check_combined. Nonzero u2 (v2)
/// lives in the null space of {1, y} ({1, x}), which needs m >= 3 (n >= 3);
/// with m = 2 only the forced-zero option can be sampled. Throws E_CONFIG
/// for n, m < 2 or an empty null space, E_THEOREM_VIOLATION if no beta row
/// is violated.
FuzzReport fuzz_combined(const GenConfig& cfg, FuzzOptions options = {});

/// Two families of three polytopes; the B family is not in parallel planes
/// (B_3 lies in y = x + 2), every A_i meets every B_j, and neither middle
/// plane holds a transversal of the opposite family.
GeneralScene counterexample_scene();

struct CounterexampleReport {
  std::vector<std::optional<Point3>> intersections;  // A_i ∩ B_j at i*3 + j
  std::optional<Line3> line_in_b2_plane;  // piercing A_1, A_2, A_3
  std::optional<Line3> line_in_a2_plane;  // piercing B_1, B_2, B_3

  bool holds() const;
};

CounterexampleReport regress_counterexample();

struct PlaneStab {
  PlaneLine line;
  std::size_t count = 0;
};

/// Best stabbing line of the opposite family's sections at one plane.
/// Throws E_EMPTY if every section is empty.
PlaneStab oracle_best_plane_line(const GridInstance& inst, Axis axis, const Rat& plane_value);

/// Runs fn(0..count-1) on worker threads and returns the results in index
/// order, so the output does not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<std::optional<Result>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        slots[k].emplace(fn(k));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace piercing
