#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace piercing;
using fixtures::R;

namespace {

HighDimInstance from_grid(const GridInstance& g) {
  std::vector<RatVec> fibers(9);
  for (std::size_t node = 0; node < 9; ++node) fibers[node] = {g.z(node % 3, node / 3)};
  return HighDimInstance::build(2, {Triple3{g.x()[0], g.x()[1], g.x()[2]}, Triple3{g.y()[0], g.y()[1], g.y()[2]}},
                                fibers);
}

HighDimInstance zero_instance(std::size_t d) {
  std::size_t nodes = 1;
  for (std::size_t k = 0; k < d; ++k) nodes *= 3;
  return HighDimInstance::build(d, std::vector<Triple3>(d, Triple3{Rat(1), Rat(2), Rat(3)}),
                                std::vector<RatVec>(nodes, zeros(d - 1)));
}

std::vector<RatVec> scalars(std::initializer_list<const char*> values) {
  std::vector<RatVec> out;
  for (const char* v : values) out.push_back({R(v)});
  return out;
}

long binomial(long n, long k) {
  long out = 1;
  for (long a = 1; a <= k; ++a) out = out * (n - k + a) / a;
  return out;
}

}  // namespace

TEST(HighDimInstance, CodeAndDecodeRoundTrip) {
  const HighDimInstance inst = zero_instance(3);
  for (std::size_t node = 0; node < inst.num_nodes(); ++node) EXPECT_EQ(HighDimInstance::code(inst.decode(node)), node);
  EXPECT_EQ(HighDimInstance::code({1, 1, 1}), 0u);
  EXPECT_EQ(HighDimInstance::code({2, 1, 1}), 1u);
  EXPECT_EQ(HighDimInstance::code({1, 2, 1}), 3u);
  EXPECT_EQ(inst.family_generators(0, 2).size(), 9u);
}

TEST(HighDimInstance, RejectsBadInput) {
  try {
    HighDimInstance::build(2, {Triple3{Rat(1), Rat(1), Rat(3)}, Triple3{Rat(1), Rat(2), Rat(3)}},
                           std::vector<RatVec>(9, zeros(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Monotone);
  }
  EXPECT_THROW(HighDimInstance::build(2, std::vector<Triple3>(2, Triple3{Rat(1), Rat(2), Rat(3)}),
                                      std::vector<RatVec>(8, zeros(1))),
               Error);
  EXPECT_THROW(HighDimInstance::build(1, {Triple3{Rat(1), Rat(2), Rat(3)}}, std::vector<RatVec>(3)), Error);
}

TEST(QFamily, AlphaExamples) {
  std::vector<RatVec> fibers(9, zeros(1));
  const HighDimInstance inst =
      HighDimInstance::build(2, {Triple3{Rat(1), Rat(2), Rat(3)}, Triple3{Rat(0), Rat(1), Rat(4)}}, fibers);
  const QFamily qf = q_family(inst);
  EXPECT_EQ(qf.alphas[0], std::make_pair(Rat(1, 2), Rat(1, 2)));
  EXPECT_EQ(qf.alphas[1], std::make_pair(Rat(3, 4), Rat(1, 4)));
  for (const RatVec& q : qf.points) EXPECT_EQ(q, (RatVec{Rat(2), Rat(1), Rat(0)}));
}

TEST(QFamily, CentralCoordinatesAndWeights) {
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GenConfig cfg;
      cfg.d = d;
      cfg.seed = seed;
      const HighDimInstance inst = random_highdim(cfg);
      const QFamily qf = q_family(inst);
      ASSERT_EQ(qf.points.size(), std::size_t{1} << d);
      EXPECT_EQ(qf.points[0], inst.point(MultiIndex(d, 2)));
      for (unsigned subset = 0; subset < qf.points.size(); ++subset) {
        for (std::size_t k = 0; k < d; ++k) EXPECT_EQ(qf.points[subset][k], inst.base(k)[1]);
        Rat total = 0;
        for (unsigned high = subset;; high = (high - 1) & subset) {
          const Rat w = q_weight(qf, subset, high);
          EXPECT_GE(w, 0);
          total += w;
          if (high == 0) break;
        }
        EXPECT_EQ(total, 1);
      }
    }
  }
}

TEST(SplitIndex, Examples) {
  const SplitWitness fig = split_index(scalars({"1/2", "11/10", "3/10", "7/20"}));
  EXPECT_EQ(fig.index, 0u);
  EXPECT_GE(fig.point[0], Rat(7, 20));
  EXPECT_LE(fig.point[0], Rat(1, 2));

  const SplitWitness same = split_index(scalars({"5", "5", "5", "5"}));
  EXPECT_EQ(same.index, 0u);
  EXPECT_EQ(same.point, RatVec{Rat(5)});

  EXPECT_FALSE(hull_split_at(scalars({"1", "0", "1", "0"}), 0));
  EXPECT_EQ(split_index(scalars({"1", "0", "1", "0"})).index, 1u);

  EXPECT_THROW(split_index(scalars({"1", "2", "3"})), Error);
}

TEST(SplitIndex, WitnessIsConsistentOnRandomMaps) {
  for (std::size_t d = 2; d <= 5; ++d) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GenConfig cfg;
      cfg.d = d;
      cfg.seed = seed * 13 + d;
      const std::vector<RatVec> pts = random_subset_points(cfg);
      const SplitWitness w = split_index(pts);
      for (const auto& [subsets, coeffs] : {std::pair{w.inside_subsets, w.inside_coeffs},
                                            std::pair{w.outside_subsets, w.outside_coeffs}}) {
        RatVec combo = zeros(d - 1);
        Rat total = 0;
        for (std::size_t k = 0; k < subsets.size(); ++k) {
          EXPECT_GE(coeffs[k], 0);
          total += coeffs[k];
          for (std::size_t c = 0; c + 1 < d; ++c) combo[c] += coeffs[k] * pts[subsets[k]][c];
        }
        EXPECT_EQ(total, 1);
        EXPECT_EQ(combo, w.point);
      }
      for (unsigned s : w.inside_subsets) EXPECT_TRUE((s >> w.index) & 1u);
      for (unsigned s : w.outside_subsets) EXPECT_FALSE((s >> w.index) & 1u);
      for (std::size_t earlier = 0; earlier < w.index; ++earlier) EXPECT_FALSE(hull_split_at(pts, earlier));
    }
  }
}

TEST(SplitIndex, CellCountIdentity) {
  for (long d = 2; d <= 12; ++d) {
    long total = 0;
    for (long k = 0; k < d; ++k) total += binomial(d, k);
    EXPECT_EQ(total, (1L << d) - 1);
  }
}

TEST(HighDimPierce, ZeroFibers) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const HighDimPierce r = highdim_pierce(zero_instance(d));
    EXPECT_EQ(r.index, 0u);
    for (std::size_t c = d; c < 2 * d - 1; ++c) {
      EXPECT_EQ(r.p1[c], 0);
      EXPECT_EQ(r.p3[c], 0);
    }
  }
}

TEST(HighDimPierce, RandomInstancesVerify) {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      GenConfig cfg;
      cfg.d = d;
      cfg.seed = seed;
      const HighDimInstance inst = random_highdim(cfg);
      const HighDimPierce r = highdim_pierce(inst);
      // Independent re-check of the three memberships.
      EXPECT_TRUE(point_in_hull(r.p1, inst.family_generators(r.index, 1)));
      EXPECT_TRUE(point_in_hull(r.q, inst.family_generators(r.index, 2)));
      EXPECT_TRUE(point_in_hull(r.p3, inst.family_generators(r.index, 3)));
      const QFamily qf = q_family(inst);
      RatVec blend = zeros(inst.ambient_dim());
      for (std::size_t c = 0; c < blend.size(); ++c) {
        blend[c] = qf.alphas[r.index].first * r.p1[c] + qf.alphas[r.index].second * r.p3[c];
      }
      EXPECT_EQ(blend, r.q);
    }
  }
}

TEST(HighDimPierce, FallbackWhenOneSideHasNoWeight) {
  const HighDimInstance inst = from_grid(fixtures::worked_example());
  QFamily qf = q_family(inst);
  qf.alphas[0] = {Rat(0), Rat(1)};
  SplitWitness split;
  split.index = 0;
  split.inside_subsets = {1u, 3u};
  split.inside_coeffs = {Rat(1), Rat(0)};
  split.outside_subsets = {0u, 2u};
  split.outside_coeffs = {Rat(1), Rat(0)};
  const HighDimPierce r = reconstruct_line(inst, qf, split);
  EXPECT_TRUE(r.fallback_used);
  EXPECT_EQ(r.p1, inst.point({1, 2}));
  EXPECT_EQ(r.p3, inst.point({3, 2}));
  EXPECT_TRUE(point_in_hull(r.p1, inst.family_generators(0, 1)));
}

TEST(HighDimPierce, TwoDimensionalCaseMatchesTheThreeByThreeTests) {
  // Coordinate 0 of the lifted instance varies x, so its family is the A
  // family (axis Y lines); coordinate 1 varies y and belongs to axis X.
  auto check = [](const GridInstance& g) {
    const HighDimInstance inst = from_grid(g);
    const Lemma33Trace t = lemma33_pierce(g);
    const QFamily qf = q_family(inst);
    std::vector<RatVec> tails;
    for (const RatVec& q : qf.points) tails.push_back({q[2]});
    EXPECT_EQ(tails[0][0], t.z_p22);
    EXPECT_EQ(tails[1][0], t.z_py);
    EXPECT_EQ(tails[2][0], t.z_px);
    EXPECT_EQ(tails[3][0], t.z_r);
    EXPECT_EQ(hull_split_at(tails, 1).has_value(), !t.x_test.is_empty());
    EXPECT_EQ(hull_split_at(tails, 0).has_value(), !t.y_test.is_empty());
    EXPECT_NO_THROW(highdim_pierce(inst));
  };
  check(fixtures::worked_example());
  check(fixtures::ridge());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    check(random_grid(cfg));
  }
}
