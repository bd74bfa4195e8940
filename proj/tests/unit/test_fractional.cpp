#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace piercing;
using fixtures::R;

namespace {

SegmentFamily family(std::initializer_list<std::tuple<long, long, long>> segs) {
  RatVec at;
  std::vector<ZInterval> spans;
  for (auto [t, lo, hi] : segs) {
    at.emplace_back(t);
    spans.emplace_back(Rat(lo), Rat(hi));
  }
  return SegmentFamily(at, spans);
}

// Largest subset a single line stabs, by one LP per subset.
std::size_t brute_force_stab(const SegmentFamily& fam) {
  std::size_t best = 0;
  for (unsigned mask = 1; mask < (1u << fam.size()); ++mask) {
    LinearSystem sys;
    sys.num_vars = 2;
    std::size_t size = 0;
    for (std::size_t k = 0; k < fam.size(); ++k) {
      if (!(mask & (1u << k))) continue;
      ++size;
      sys.add_ge({fam.abscissa(k), Rat(1)}, fam.interval(k).lo());
      sys.add_ge({-fam.abscissa(k), Rat(-1)}, -fam.interval(k).hi());
    }
    if (size > best && solve_feasibility(sys).is_feasible()) best = size;
  }
  return best;
}

GridInstance grid(std::uint64_t seed, std::size_t n, std::size_t m) {
  GenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.seed = seed;
  return random_grid(cfg);
}

}  // namespace

TEST(Lemma33, WorkedExampleTrace) {
  const Lemma33Trace t = lemma33_pierce(fixtures::worked_example());
  EXPECT_EQ(t.z_px, Rat(11, 10));
  EXPECT_EQ(t.z_py, Rat(3, 10));
  EXPECT_EQ(t.z_r, Rat(7, 20));
  EXPECT_EQ(t.z_p22, Rat(1, 2));
  EXPECT_EQ(t.x_test, ZInterval(Rat(7, 20), Rat(1, 2)));
  EXPECT_EQ(t.axis, Axis::X);
  EXPECT_EQ(t.z_star, Rat(7, 20));
  EXPECT_EQ(t.lambda, 1);
  EXPECT_EQ(t.first_endpoint, (Point3{Rat(2), Rat(1), Rat(7, 10)}));
  EXPECT_EQ(t.last_endpoint, (Point3{Rat(2), Rat(3), Rat(0)}));
  EXPECT_EQ(t.line, (PlaneLine{Axis::X, Rat(2), Rat(-7, 20), Rat(21, 20)}));
  EXPECT_TRUE(t.report.all());
}

TEST(Lemma33, ZeroGridPrefersAxisX) {
  const Lemma33Trace t = lemma33_pierce(fixtures::zero_grid(3, 3));
  EXPECT_EQ(t.z_r, 0);
  EXPECT_EQ(t.z_px, 0);
  EXPECT_EQ(t.axis, Axis::X);
  EXPECT_EQ(t.line, (PlaneLine{Axis::X, Rat(2), Rat(0), Rat(0)}));
}

TEST(Lemma33, RidgeFallsToAxisY) {
  const Lemma33Trace t = lemma33_pierce(fixtures::ridge());
  EXPECT_EQ(t.z_r, 0);
  EXPECT_EQ(t.z_px, 0);
  EXPECT_EQ(t.z_py, 1);
  EXPECT_EQ(t.z_p22, 1);
  EXPECT_TRUE(t.x_test.is_empty());
  EXPECT_EQ(t.axis, Axis::Y);
  EXPECT_EQ(t.z_star, 0);
  EXPECT_EQ(t.line, (PlaneLine{Axis::Y, Rat(2), Rat(0), Rat(0)}));
  EXPECT_TRUE(t.report.all());
}

TEST(Lemma33, RejectsNonSquareThree) {
  try {
    lemma33_pierce(fixtures::zero_grid(3, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Dimension);
  }
}

TEST(Lemma33, RandomInstancesAndBlendIdentity) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GridInstance g = grid(seed, 3, 3);
    const Lemma33Trace t = lemma33_pierce(g);
    ASSERT_TRUE(line_pierces(g, t.line).all()) << "seed " << seed;
    const Rat& center = t.axis == Axis::X ? g.y()[1] : g.x()[1];
    const Rat& side = t.axis == Axis::X ? t.z_px : t.z_py;
    EXPECT_EQ(t.line.height_at(center), t.z_star);
    EXPECT_EQ(t.lambda * t.z_r + (1 - t.lambda) * side, t.z_star);
    EXPECT_TRUE((t.axis == Axis::X ? t.x_test : t.y_test).contains(t.z_star));
    EXPECT_GE(t.lambda, 0);
    EXPECT_LE(t.lambda, 1);
  }
}

TEST(StabTriples, Examples) {
  EXPECT_TRUE(stab_triples(family({{1, 0, 0}, {2, 1, 1}, {3, 0, 0}})).empty());
  EXPECT_EQ(stab_triples(family({{1, 0, 1}, {2, 0, 1}, {3, 0, 1}})), (std::vector<Triple>{{0, 1, 2}}));
  const SegmentFamily fig = plane_sections(fixtures::worked_example(), Axis::X, Rat(2));
  EXPECT_EQ(stab_triples(fig).size(), 1u);
  EXPECT_EQ(stab_count(fig, StabLine{Rat(-7, 20), Rat(21, 20)}), 3u);
}

TEST(BestStabLine, Examples) {
  EXPECT_EQ(best_stab_line(family({{1, 0, 0}, {2, 1, 1}, {3, 0, 0}})).count, 2u);
  EXPECT_EQ(best_stab_line(plane_sections(fixtures::worked_example(), Axis::X, Rat(2))).count, 3u);
  EXPECT_EQ(best_stab_line(family({{4, -1, 2}})).count, 1u);
  EXPECT_THROW(best_stab_line(SegmentFamily{}), Error);
}

TEST(BestStabLine, MatchesSubsetLpOracle) {
  SplitMix64 rng(17);
  GenConfig cfg;
  cfg.numerator_bound = 6;
  cfg.denominator_bound = 3;
  for (int trial = 0; trial < 300; ++trial) {
    const auto size = static_cast<std::size_t>(rng.uniform(1, 7));
    const SegmentFamily fam = random_segment_family(rng, cfg, size);
    const StabResult best = best_stab_line(fam);
    EXPECT_EQ(best.count, brute_force_stab(fam)) << "trial " << trial;
    EXPECT_EQ(stab_count(fam, best.line), best.count);
  }
}

TEST(StabTriples, AgreeWithThreeElementOracle) {
  SplitMix64 rng(23);
  GenConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    const SegmentFamily fam = random_segment_family(rng, cfg, 6);
    const std::vector<Triple> good = stab_triples(fam);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = a + 1; b < 6; ++b) {
        for (std::size_t c = b + 1; c < 6; ++c) {
          const bool listed = std::find(good.begin(), good.end(), Triple{a, b, c}) != good.end();
          EXPECT_EQ(listed, best_stab_line(fam.subfamily({a, b, c})).count == 3);
        }
      }
    }
  }
}

TEST(SegmentFamily, FractionalHellyBound) {
  SplitMix64 rng(41);
  GenConfig cfg;
  for (int trial = 0; trial < 300; ++trial) {
    const auto size = static_cast<std::size_t>(rng.uniform(3, 9));
    const SegmentFamily fam = random_segment_family(rng, cfg, size);
    const Rat alpha = Rat(static_cast<long>(stab_triples(fam).size())) / binomial3(size);
    const std::size_t count = best_stab_line(fam).count;
    EXPECT_GE(Rat(static_cast<long>(count)), alpha / 3 * static_cast<long>(size));
    if (alpha == 1) EXPECT_EQ(count, size);
  }
}

TEST(SegmentFamily, RejectsBadInput) {
  EXPECT_THROW(SegmentFamily({Rat(1), Rat(1)}, {ZInterval(Rat(0), Rat(1)), ZInterval(Rat(0), Rat(1))}), Error);
  EXPECT_THROW(SegmentFamily({Rat(1)}, {ZInterval::empty()}), Error);
  EXPECT_THROW(SegmentFamily({Rat(1)}, {}), Error);
}

TEST(Counting, SubgridIdentity) {
  for (std::size_t n = 3; n <= 12; ++n) {
    Rat total = 0;
    for (std::size_t i = 2; i + 1 <= n; ++i) total += Rat(static_cast<long>((i - 1) * (n - i)));
    EXPECT_EQ(total, binomial3(n)) << n;
  }
  EXPECT_EQ(binomial3(5), 10);
  EXPECT_EQ(binomial3(2), 0);
}

TEST(FractionalTransversal, Examples) {
  const FracResult zero = fractional_transversal(fixtures::zero_grid(5, 5));
  EXPECT_EQ(zero.count, 5u);
  EXPECT_EQ(zero.line.slope, 0);
  EXPECT_EQ(zero.line.intercept, 0);

  const FracResult fig = fractional_transversal(fixtures::worked_example());
  EXPECT_EQ(fig.axis, Axis::X);
  EXPECT_EQ(fig.line.plane_value, 2);
  EXPECT_EQ(fig.count, 3u);

  const FracResult ridge = fractional_transversal(fixtures::ridge());
  EXPECT_EQ(ridge.axis, Axis::Y);
  EXPECT_EQ(ridge.count, 3u);
  EXPECT_NEAR(ridge.kalai_constant, 0.2063, 1e-4);

  try {
    fractional_transversal(fixtures::zero_grid(2, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Dimension);
  }
}

TEST(FractionalTransversal, DeltaAndCountBoundsOnRandomGrids) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GridInstance g = grid(seed + 9000, 3 + seed % 4, 3 + (seed / 4) % 4);
    const FracResult r = fractional_transversal(g);
    EXPECT_GE(r.delta, Rat(1, 2));
    EXPECT_GE(r.alpha, Rat(1, 2));
    const std::size_t size = g.family_size(r.axis);
    EXPECT_GE(Rat(static_cast<long>(r.count)) * 6, Rat(static_cast<long>(size)));
    EXPECT_GE(Rat(static_cast<long>(r.count)), r.alpha / 3 * static_cast<long>(size));
    EXPECT_EQ(line_pierces(g, r.line).count(), r.count);
    // delta from the per-plane counts, independently.
    Rat best = 0;
    for (std::size_t c : r.x_good) best = std::max<Rat>(best, Rat(static_cast<long>(c)) / binomial3(g.m()));
    for (std::size_t c : r.y_good) best = std::max<Rat>(best, Rat(static_cast<long>(c)) / binomial3(g.n()));
    EXPECT_EQ(best, r.delta);
  }
}
