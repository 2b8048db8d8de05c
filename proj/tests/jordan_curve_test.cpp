#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace jsweep;
using jsweep::testing::q;

namespace {

bool has_violation(const ValidationResult& r, ErrorKind k) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST(Validate, Triangle) {
  auto r = Polygon::validate({{0, 0}, {6, 1}, {2, 5}});
  ASSERT_TRUE(r.polygon.has_value());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.polygon->size(), 3u);
  EXPECT_EQ(r.polygon->interior_on_right(), Traversal::Backward);
  auto cw = Polygon::from_vertices({{2, 5}, {6, 1}, {0, 0}});
  EXPECT_EQ(cw.interior_on_right(), Traversal::Forward);
}

TEST(Validate, Violations) {
  auto few = Polygon::validate({{0, 0}, {1, 2}});
  EXPECT_FALSE(few.polygon);
  EXPECT_TRUE(has_violation(few, ErrorKind::TooFewVertices));

  auto flat = Polygon::validate({{0, 0}, {4, 0}, {2, 3}});
  EXPECT_TRUE(has_violation(flat, ErrorKind::AxisParallelEdge));
  EXPECT_TRUE(has_violation(flat, ErrorKind::DuplicateCoordinate));

  auto bowtie = Polygon::validate({{0, 0}, {4, 3}, {5, 1}, {1, 5}});
  EXPECT_FALSE(bowtie.polygon);
  EXPECT_TRUE(has_violation(bowtie, ErrorKind::NotSimple));

  try {
    Polygon::from_vertices({{0, 0}, {1, 2}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
  }
}

TEST(OpenSegment, Triangle) {
  auto poly = jsweep::testing::triangle();
  VSegment s = open_segment(poly, {3, 2});
  EXPECT_EQ(s.x, 3);
  EXPECT_EQ(s.y_lo, q(1, 2));
  EXPECT_EQ(s.y_hi, 4);
  ASSERT_TRUE(s.lo_on && s.hi_on);
  EXPECT_EQ(*s.lo_on, (PointOnJ{0, q(1, 2)}));
  EXPECT_EQ(*s.hi_on, (PointOnJ{1, q(3, 4)}));
}

TEST(OpenSegment, Errors) {
  auto poly = jsweep::testing::triangle();
  try {
    open_segment(poly, {3, q(1, 2)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointOnCurve);
  }
  try {
    open_segment(poly, {1, 4});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
  }
}

TEST(FirstHit, Horizontal) {
  auto poly = jsweep::testing::triangle();
  auto right = first_hit_horizontal(poly, {3, 2}, HDir::Right);
  ASSERT_TRUE(right);
  EXPECT_EQ(right->x, 5);
  EXPECT_EQ(right->on, (PointOnJ{1, q(1, 4)}));
  auto left = first_hit_horizontal(poly, {3, 2}, HDir::Left);
  ASSERT_TRUE(left);
  EXPECT_EQ(left->x, q(4, 5));
  EXPECT_EQ(left->on, (PointOnJ{2, q(3, 5)}));
  EXPECT_FALSE(first_hit_horizontal(poly, {7, 2}, HDir::Right));
}

TEST(FirstHit, Vertical) {
  auto poly = jsweep::testing::triangle();
  auto up = first_hit_vertical(poly, {3, 2}, true);
  ASSERT_TRUE(up);
  EXPECT_EQ(up->first, 4);
  auto down = first_hit_vertical(poly, {3, 2}, false);
  ASSERT_TRUE(down);
  EXPECT_EQ(down->first, q(1, 2));
  EXPECT_FALSE(first_hit_vertical(poly, {3, 10}, true));
}

TEST(Classify, Cases) {
  auto poly = jsweep::testing::triangle();
  EXPECT_EQ(classify(poly, {3, 2}), Location::Inside);
  EXPECT_EQ(classify(poly, {10, 10}), Location::Outside);
  EXPECT_EQ(classify(poly, {3, q(1, 2)}), Location::On);
  EXPECT_EQ(classify(poly, {0, 0}), Location::On);
  // Rays through vertices.
  EXPECT_EQ(classify(poly, {1, 1}), Location::Inside);
  EXPECT_EQ(classify(poly, {-1, 1}), Location::Outside);
  EXPECT_EQ(classify(poly, {-1, 5}), Location::Outside);
}

TEST(Addresses, LocateAndTravel) {
  auto poly = jsweep::testing::triangle();
  EXPECT_EQ(poly.locate(0, {6, 1}), (PointOnJ{1, 0}));
  EXPECT_EQ(poly.locate(0, {3, q(1, 2)}), (PointOnJ{0, q(1, 2)}));
  EXPECT_EQ(poly.point_at({1, q(1, 4)}), (Point{5, 2}));
  EXPECT_EQ(poly.travel({0, 0}, {1, 0}, Traversal::Forward), 1);
  EXPECT_EQ(poly.travel({0, 0}, {1, 0}, Traversal::Backward), 2);
  EXPECT_EQ(poly.travel({2, q(1, 2)}, {0, q(1, 2)}, Traversal::Forward), 1);
}

TEST(ArcBetween, ListsPassedVertices) {
  auto poly = jsweep::testing::triangle();
  auto fwd = arc_between(poly, {0, q(1, 2)}, {2, q(1, 2)}, Traversal::Forward);
  ASSERT_EQ(fwd.points.size(), 4u);
  EXPECT_EQ(fwd.points[1], (PointOnJ{1, 0}));
  EXPECT_EQ(fwd.points[2], (PointOnJ{2, 0}));
  auto back = arc_between(poly, {0, q(1, 2)}, {2, q(1, 2)}, Traversal::Backward);
  ASSERT_EQ(back.points.size(), 3u);
  EXPECT_EQ(back.points[1], (PointOnJ{0, 0}));
}

TEST(Properties, GeneratedPolygonsAreValid) {
  for (auto kind : {PolygonKind::Star, PolygonKind::Spiral, PolygonKind::Comb}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Fixture f = gen_polygon(kind, 24, seed);
      EXPECT_TRUE(Polygon::validate(f.polygon.vertices()).polygon.has_value());
      EXPECT_EQ(classify(f.polygon, f.seed), Location::Inside);
    }
  }
}

TEST(Properties, OpenSegmentEndsLieOnCurve) {
  Fixture f = gen_polygon(PolygonKind::Star, 32, 7);
  int checked = 0;
  for (const Point& p : sample_points(f.polygon.bbox(), 400, 3)) {
    if (classify(f.polygon, p) != Location::Inside) continue;
    VSegment s = open_segment(f.polygon, p);
    EXPECT_TRUE(s.y_lo < p.y && p.y < s.y_hi);
    EXPECT_EQ(f.polygon.point_at(*s.lo_on), s.lo_point());
    EXPECT_EQ(f.polygon.point_at(*s.hi_on), s.hi_point());
    EXPECT_EQ(classify(f.polygon, s.mid_point()), Location::Inside);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}
