#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace jsweep;
using jsweep::testing::q;

namespace {

RunResult run_triangle(Scalar eps, int max_steps = 10000, std::string_view strategy = "greedy") {
  static const Polygon poly = jsweep::testing::triangle();
  return run(poly, jsweep::testing::triangle_seed(), Config{eps, max_steps, Strategy::parse(strategy)});
}

}  // namespace

TEST(Strategy, ParseAndName) {
  EXPECT_EQ(Strategy::parse("greedy").kind, StrategyKind::Greedy);
  EXPECT_EQ(Strategy::parse("lifo").kind, StrategyKind::Lifo);
  Strategy r = Strategy::parse("random:42");
  EXPECT_EQ(r.kind, StrategyKind::Random);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_EQ(r.name(), "random:42");
  EXPECT_THROW(Strategy::parse("random:x"), Error);
  EXPECT_THROW(Strategy::parse("best"), Error);
}

TEST(InitialSegment, Triangle) {
  auto poly = jsweep::testing::triangle();
  HSegment t = initial_segment(poly, {3, 2});
  EXPECT_EQ(t.y, 2);
  EXPECT_EQ(t.x_lo, q(4, 5));
  EXPECT_EQ(t.x_hi, 5);
  EXPECT_EQ(*t.lo_end.on_j, (PointOnJ{2, q(3, 5)}));
  EXPECT_EQ(*t.hi_end.on_j, (PointOnJ{1, q(1, 4)}));
}

TEST(InitialSegment, Errors) {
  auto poly = jsweep::testing::triangle();
  try {
    initial_segment(poly, {3, q(1, 2)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SeedOnCurve);
  }
  try {
    initial_segment(poly, {20, 2});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundedFace);
  }
}

TEST(ExtendFromWall, TriangleWalls) {
  auto poly = jsweep::testing::triangle();
  Region r = Region::init(poly, build_sweep(poly, initial_segment(poly, {3, 2})), {3, 2});
  auto [t2, term2] = extend_from_wall(poly, r, r.wall(0));
  EXPECT_EQ(t2.y, q(16, 15));
  EXPECT_EQ(t2.x_lo, q(32, 75));
  EXPECT_EQ(t2.x_hi, q(4, 5));
  EXPECT_EQ(term2.kind, Terminus::Kind::OnJ);
  EXPECT_TRUE(t2.hi_end.kind == SegmentEnd::Kind::AtWall);

  auto [t3, term3] = extend_from_wall(poly, r, r.wall(1));
  EXPECT_EQ(t3.y, q(17, 12));
  EXPECT_EQ(t3.x_lo, 5);
  EXPECT_EQ(t3.x_hi, q(67, 12));
  EXPECT_EQ(term3.hit, (Point{q(67, 12), q(17, 12)}));
  EXPECT_TRUE(t3.lo_end.kind == SegmentEnd::Kind::AtWall);
}

TEST(Run, GreedyStepOrder) {
  RunResult res = run_triangle(0, 5);
  ASSERT_EQ(res.trace.size(), 4u);
  EXPECT_EQ(res.trace[0].wall_used.length(), q(28, 15));
  EXPECT_EQ(res.trace[1].wall_used.length(), q(7, 6));
  EXPECT_EQ(res.trace[2].wall_used.length(), q(224, 225));
  EXPECT_EQ(res.trace[3].wall_used.length(), q(1792, 3375));
  EXPECT_EQ(res.trace[1].walls_added.at(0).length(), q(35, 72));
  EXPECT_EQ(res.trace[1].walls_added.at(0).seg.x, q(67, 12));
  EXPECT_EQ(res.halt_reason, HaltReason::MaxSteps);
  EXPECT_EQ(res.sweep_count, 5);
}

TEST(Run, HaltReasons) {
  RunResult one = run_triangle(1);
  EXPECT_EQ(one.sweep_count, 3);
  EXPECT_EQ(one.halt_reason, HaltReason::EpsilonReached);

  RunResult capped = run_triangle(q(1, 1000), 2);
  EXPECT_EQ(capped.sweep_count, 2);
  EXPECT_EQ(capped.halt_reason, HaltReason::MaxSteps);

  RunResult none = run_triangle(10);
  EXPECT_EQ(none.sweep_count, 1);
  EXPECT_TRUE(none.trace.empty());
  EXPECT_EQ(none.halt_reason, HaltReason::EpsilonReached);
}

TEST(Run, EpsHalfTrace) {
  RunResult res = run_triangle(q(1, 2));
  EXPECT_EQ(res.sweep_count, 5);
  EXPECT_EQ(res.halt_reason, HaltReason::EpsilonReached);
  EXPECT_EQ(res.trace[2].walls_added.at(0).length(), q(1792, 3375));
  EXPECT_EQ(res.trace[2].walls_added.at(0).seg.x, q(256, 1125));
  EXPECT_EQ(res.trace[3].walls_added.at(0).length(), q(14336, 50625));
  EXPECT_EQ(res.trace[3].walls_added.at(0).seg.x, q(2048, 16875));
  for (std::size_t i = 0; i < res.trace.size(); ++i) EXPECT_EQ(res.trace[i].step, static_cast<int>(i) + 2);
}

TEST(Run, RecursionTree) {
  RunResult res = run_triangle(q(1, 2));
  ASSERT_EQ(res.tree.nodes.size(), 5u);
  EXPECT_FALSE(res.tree.node(1).parent);
  for (const auto& rec : res.trace) {
    EXPECT_EQ(res.tree.node(rec.step).parent, rec.wall_used.origin_step);
  }
}

TEST(Run, Deterministic) {
  for (auto strategy : {"greedy", "fifo", "lifo", "random:9"}) {
    RunResult a = run_triangle(q(1, 20), 30, strategy);
    RunResult b = run_triangle(q(1, 20), 30, strategy);
    ASSERT_EQ(a.trace.size(), b.trace.size()) << strategy;
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      EXPECT_EQ(a.trace[i].wall_used.id, b.trace[i].wall_used.id);
      EXPECT_EQ(a.trace[i].area_after, b.trace[i].area_after);
    }
  }
}

TEST(Driver, StepByStep) {
  auto poly = jsweep::testing::triangle();
  GreedyDriver d(poly, {3, 2}, Config{q(1, 2), 100, {}});
  int steps = 0;
  while (true) {
    auto r = d.step();
    if (std::holds_alternative<HaltReason>(r)) {
      EXPECT_EQ(std::get<HaltReason>(r), HaltReason::EpsilonReached);
      break;
    }
    ++steps;
    EXPECT_EQ(std::get<StepRecord>(r).area_after, d.region().area());
  }
  EXPECT_EQ(steps, 4);
  EXPECT_EQ(d.sweep_count(), 5);
}
