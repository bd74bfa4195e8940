#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace piercing;
using fixtures::R;

namespace {

LinearSystem one_var(std::initializer_list<std::pair<long, long>> ge) {
  LinearSystem sys;
  sys.num_vars = 1;
  for (auto [a, b] : ge) sys.add_ge({Rat(a)}, Rat(b));
  return sys;
}

LinearSystem random_system(SplitMix64& rng) {
  LinearSystem sys;
  sys.num_vars = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto neq = rng.uniform(0, 2);
  const auto nge = rng.uniform(0, 5);
  auto row = [&] {
    RatVec c(sys.num_vars);
    for (Rat& q : c) q = Rat(rng.uniform(-3, 3));
    return c;
  };
  for (std::int64_t r = 0; r < neq; ++r) sys.add_eq(row(), Rat(rng.uniform(-4, 4)));
  for (std::int64_t r = 0; r < nge; ++r) sys.add_ge(row(), Rat(rng.uniform(-4, 4)));
  return sys;
}

}  // namespace

TEST(ParseRat, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(R("6/8"), Rat(3, 4));
  EXPECT_EQ(R("-12"), Rat(-12));
  EXPECT_EQ(R("-0.35"), Rat(-7, 20));
  EXPECT_EQ(R(".5"), Rat(1, 2));
  EXPECT_EQ(R("2."), Rat(2));
  EXPECT_EQ(R("-3/6"), Rat(-1, 2));
  EXPECT_EQ(R(" 7/2 "), Rat(7, 2));
  EXPECT_EQ(to_string(R("10/4")), "5/2");
  EXPECT_EQ(to_string(R("-0")), "0");
}

TEST(ParseRat, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "1/2/3", "--1", "1e5", "3/-6", "1/+2"}) {
    EXPECT_THROW(parse_rat(bad), Error) << bad;
  }
}

TEST(SolveFeasibility, EqualityPinsTheVariable) {
  LinearSystem sys;
  sys.num_vars = 1;
  sys.add_eq({Rat(1)}, Rat(1));
  sys.add_ge({Rat(1)}, Rat(0));
  const FeasOutcome out = solve_feasibility(sys);
  ASSERT_TRUE(out.is_feasible());
  EXPECT_EQ(out.point(), RatVec{Rat(1)});
}

TEST(SolveFeasibility, ContradictionPairYieldsUnitCertificate) {
  const LinearSystem sys = one_var({{1, 1}, {-1, 0}});
  const FeasOutcome out = solve_feasibility(sys);
  ASSERT_FALSE(out.is_feasible());
  EXPECT_EQ(out.cert().ge_mults, (RatVec{Rat(1), Rat(1)}));
  EXPECT_TRUE(verify_farkas(sys, out.cert()));
}

TEST(SolveFeasibility, EmptySystemIsFeasibleWithEmptyPoint) {
  const FeasOutcome out = solve_feasibility(LinearSystem{});
  ASSERT_TRUE(out.is_feasible());
  EXPECT_TRUE(out.point().empty());
}

TEST(SolveFeasibility, RowLengthMismatchIsDimensionError) {
  LinearSystem sys;
  sys.num_vars = 2;
  sys.add_ge({Rat(1)}, Rat(0));
  try {
    solve_feasibility(sys);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Dimension);
  }
}

TEST(VerifyFarkas, SignAndZeroRules) {
  const LinearSystem sys = one_var({{1, 1}, {-1, 0}});
  EXPECT_TRUE(verify_farkas(sys, {{}, {Rat(1), Rat(1)}}));
  EXPECT_FALSE(verify_farkas(sys, {{}, {Rat(0), Rat(0)}}));
  EXPECT_FALSE(verify_farkas(sys, {{}, {Rat(-1), Rat(-1)}}));
  EXPECT_THROW(verify_farkas(sys, {{}, {Rat(1)}}), Error);
}

TEST(PointInHull, Examples) {
  const auto mid = point_in_hull({Rat(1), Rat(1)}, {{Rat(0), Rat(0)}, {Rat(2), Rat(2)}});
  ASSERT_TRUE(mid);
  EXPECT_EQ(*mid, (RatVec{Rat(1, 2), Rat(1, 2)}));
  EXPECT_FALSE(point_in_hull({Rat(2), Rat(0)}, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));

  const GridInstance fig = fixtures::worked_example();
  std::vector<RatVec> b2;
  for (const Point3& p : fig.vertices(Axis::X, 1)) b2.push_back({p[0], p[1], p[2]});
  const auto inside = point_in_hull({Rat(2), Rat(2), Rat(7, 20)}, b2);
  ASSERT_TRUE(inside);
  RatVec back = zeros(3);
  Rat total = 0;
  for (std::size_t k = 0; k < b2.size(); ++k) {
    EXPECT_GE((*inside)[k], 0);
    total += (*inside)[k];
    for (int c = 0; c < 3; ++c) back[c] += (*inside)[k] * b2[k][c];
  }
  EXPECT_EQ(total, 1);
  EXPECT_EQ(back, (RatVec{Rat(2), Rat(2), Rat(7, 20)}));
}

TEST(SolveFeasibility, SingleVariableMatchesIntervalOracle) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    LinearSystem sys;
    sys.num_vars = 1;
    // Oracle: intersect the half-lines a*v >= b directly.
    bool empty = false;
    std::optional<Rat> lo, hi;
    const auto rows = rng.uniform(1, 4);
    for (std::int64_t r = 0; r < rows; ++r) {
      const Rat a(rng.uniform(-3, 3));
      const Rat b(rng.uniform(-5, 5));
      sys.add_ge({a}, b);
      if (a > 0) {
        Rat bound = b / a;
        if (!lo || bound > *lo) lo = bound;
      } else if (a < 0) {
        Rat bound = b / a;
        if (!hi || bound < *hi) hi = bound;
      } else if (b > 0) {
        empty = true;
      }
    }
    if (lo && hi && *lo > *hi) empty = true;
    const FeasOutcome out = solve_feasibility(sys);
    EXPECT_EQ(out.is_feasible(), !empty) << "trial " << trial;
  }
}

TEST(SolveFeasibility, RandomSystemsAreSoundExclusiveAndDeterministic) {
  SplitMix64 rng(2024);
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const LinearSystem sys = random_system(rng);
    const FeasOutcome out = solve_feasibility(sys);
    if (out.is_feasible()) {
      ++feasible;
      ASSERT_TRUE(satisfies(sys, out.point())) << "trial " << trial;
    } else {
      ++infeasible;
      ASSERT_TRUE(verify_farkas(sys, out.cert())) << "trial " << trial;
    }
    ASSERT_EQ(solve_feasibility(sys), out);
  }
  EXPECT_GT(feasible, 1000u);
  EXPECT_GT(infeasible, 1000u);
}

TEST(VerifyFarkas, NoSystemAdmitsBothWitnesses) {
  // A feasible point p and a certificate y would give 0 = y.(A p) >= y.b > 0.
  SplitMix64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const LinearSystem sys = random_system(rng);
    const FeasOutcome out = solve_feasibility(sys);
    if (!out.is_feasible()) continue;
    FarkasCert probe{RatVec(sys.eq_rows.size()), RatVec(sys.ge_rows.size())};
    for (Rat& q : probe.eq_mults) q = Rat(rng.uniform(-2, 2));
    for (Rat& q : probe.ge_mults) q = Rat(rng.uniform(0, 2));
    EXPECT_FALSE(verify_farkas(sys, probe));
  }
}
