#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace jsweep;
using jsweep::testing::closed;
using jsweep::testing::q;

namespace {

Region init_triangle(const Polygon& poly) {
  return Region::init(poly, build_sweep(poly, initial_segment(poly, {3, 2})), {3, 2});
}

BoundaryPiece arc(PointOnJ from, PointOnJ to, bool full = false) {
  BoundaryPiece p;
  p.from = from;
  p.to = to;
  p.full = full;
  return p;
}

BoundaryPiece wall(int id, PointOnJ from, PointOnJ to, bool upward) {
  BoundaryPiece p;
  p.kind = BoundaryPiece::Kind::Wall;
  p.wall = id;
  p.from = from;
  p.to = to;
  p.upward = upward;
  return p;
}

// Chords of the triangle at x=3 and x=4.
const PointOnJ A{0, q(1, 2)}, B{1, q(3, 4)}, C{0, q(2, 3)}, D{1, q(1, 2)};

}  // namespace

TEST(Region, Init) {
  auto poly = jsweep::testing::triangle();
  Region r = init_triangle(poly);
  EXPECT_EQ(r.cycles().size(), 1u);
  EXPECT_EQ(r.walls().size(), 2u);
  EXPECT_EQ(r.area(), q(1267, 100));
  ASSERT_TRUE(r.max_wall());
  EXPECT_EQ(r.max_wall()->length(), q(28, 15));
  EXPECT_EQ(r.max_wall()->seg.x, q(4, 5));
  for (const auto& [cid, c] : r.cycles()) EXPECT_TRUE(closed(c.pieces));
}

TEST(Region, Contains) {
  auto poly = jsweep::testing::triangle();
  Region r = init_triangle(poly);
  EXPECT_TRUE(r.contains({3, 2}));
  EXPECT_TRUE(r.contains({2, q(49, 10)}));
  EXPECT_FALSE(r.contains({q(1, 2), q(1, 10)}));
  EXPECT_FALSE(r.contains({100, 100}));
  const Wall& w = r.wall(0);
  EXPECT_FALSE(r.contains(w.seg.lo_point()));
  EXPECT_FALSE(r.contains(w.seg.mid_point()));
}

TEST(WallOrder, LengthThenXThenY) {
  WallOrder less;
  Wall a{VSegment{1, 0, 2, {}, {}}, 0};
  Wall b{VSegment{3, 5, 7, {}, {}}, 1};
  Wall c{VSegment{3, 0, 3, {}, {}}, 2};
  Wall d{VSegment{1, 1, 3, {}, {}}, 3};
  EXPECT_TRUE(less(a, b));
  EXPECT_FALSE(less(b, a));
  EXPECT_TRUE(less(c, a));
  EXPECT_TRUE(less(a, d));
}

TEST(Region, SpliceWithoutFarWall) {
  auto poly = jsweep::testing::triangle();
  Region r = init_triangle(poly);
  auto [t2, term] = extend_from_wall(poly, r, r.wall(0));
  SpliceResult res = r.splice_merge(build_sweep(poly, t2, 2), 0, std::nullopt);
  EXPECT_EQ(res.event, CycleEvent::None);
  ASSERT_EQ(res.walls_removed.size(), 1u);
  EXPECT_EQ(res.walls_removed[0].id, 0);
  ASSERT_EQ(res.walls_added.size(), 1u);
  EXPECT_EQ(res.walls_added[0].length(), q(224, 225));
  EXPECT_EQ(res.walls_added[0].seg.x, q(32, 75));
  EXPECT_EQ(r.area(), q(1267, 100) + q(18032, 33750));
  EXPECT_EQ(r.cycles().size(), 1u);
  EXPECT_EQ(r.wall_index().size(), 2u);
  EXPECT_EQ(r.sweeps().size(), 2u);
  for (const auto& [cid, c] : r.cycles()) EXPECT_TRUE(closed(c.pieces));
}

TEST(Region, SpliceRejectsWrongWall) {
  auto poly = jsweep::testing::triangle();
  Region r = init_triangle(poly);
  auto [t2, term] = extend_from_wall(poly, r, r.wall(0));
  try {
    r.splice_merge(build_sweep(poly, t2, 2), 1, std::nullopt);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AttachMismatch);
  }
}

TEST(CancelWallPair, MergesTwoCycles) {
  auto poly = jsweep::testing::triangle();
  std::map<int, BoundaryCycle> cycles;
  cycles[0] = {0, {arc(A, B), wall(7, B, A, false)}};
  cycles[3] = {3, {arc(B, A), wall(7, A, B, true)}};
  int next = 4;
  EXPECT_EQ(cancel_wall_pair(poly, cycles, 7, next), CycleEvent::Merge);
  ASSERT_EQ(cycles.size(), 1u);
  const Cycle& c = cycles.at(0).pieces;
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].full);
  EXPECT_EQ(next, 4);
}

TEST(CancelWallPair, SplitsOneCycle) {
  auto poly = jsweep::testing::triangle();
  std::map<int, BoundaryCycle> cycles;
  cycles[2] = {2,
               {wall(7, B, A, false), arc(A, C), wall(8, C, D, true), arc(D, A), wall(7, A, B, true),
                arc(B, B, true)}};
  int next = 5;
  EXPECT_EQ(cancel_wall_pair(poly, cycles, 7, next), CycleEvent::Split);
  EXPECT_EQ(next, 6);
  ASSERT_EQ(cycles.size(), 2u);
  for (const auto& [cid, c] : cycles) EXPECT_TRUE(closed(c.pieces));
  int walls8 = 0;
  for (const auto& [cid, c] : cycles) {
    for (const auto& p : c.pieces) walls8 += p.kind == BoundaryPiece::Kind::Wall && p.wall == 8;
  }
  EXPECT_EQ(walls8, 1);
}

TEST(CancelWallPair, RequiresTwoCopies) {
  auto poly = jsweep::testing::triangle();
  std::map<int, BoundaryCycle> cycles;
  cycles[0] = {0, {arc(A, B), wall(7, B, A, false)}};
  int next = 1;
  try {
    cancel_wall_pair(poly, cycles, 7, next);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AttachMismatch);
  }
}
