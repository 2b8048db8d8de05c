#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "jsweep/error.hpp"
#include "jsweep/exact_geom.hpp"

using namespace jsweep;

TEST(ParseScalar, Forms) {
  EXPECT_EQ(parse_scalar("-3"), Scalar(-3));
  EXPECT_EQ(parse_scalar("0.5"), Scalar(1, 2));
  EXPECT_EQ(parse_scalar("-0.125"), Scalar(-1, 8));
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(parse_scalar("+7"), Scalar(7));
}

TEST(ParseScalar, Rejects) {
  for (const char* bad : {"", "abc", "1e3", ".5x", "1/0", "nan", "inf", "1/2/3", "0x10"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(FormatScalar, AlwaysFraction) {
  EXPECT_EQ(format_scalar(Scalar(3)), "3/1");
  EXPECT_EQ(format_scalar(parse_scalar("-6/4")), "-3/2");
  EXPECT_EQ(parse_scalar(format_scalar(Scalar(224, 225))), Scalar(224, 225));
}

TEST(Orient, Signs) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient({0, 0}, {0, 1}, {1, 0}), -1);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {Scalar(1, 3), Scalar(1, 3)}), 0);
}

TEST(EdgeQueries, ExactValues) {
  Edge e{{0, 0}, {6, 1}};
  EXPECT_EQ(*edge_y_at_x(e, 3), Scalar(1, 2));
  EXPECT_EQ(*edge_y_at_x(e, 6), Scalar(1));
  EXPECT_FALSE(edge_y_at_x(e, 7).has_value());
  EXPECT_EQ(*edge_x_at_y(e, Scalar(1, 2)), Scalar(3));
  EXPECT_FALSE(edge_x_at_y(e, -1).has_value());
  EXPECT_TRUE(on_edge(e, {3, Scalar(1, 2)}));
  EXPECT_TRUE(on_edge(e, {0, 0}));
  EXPECT_FALSE(on_edge(e, {3, 1}));
  EXPECT_FALSE(on_edge(e, {12, 2}));
}

TEST(Shoelace, TriangleAndInvariance) {
  std::vector<Point> v{{0, 0}, {6, 1}, {2, 5}};
  EXPECT_EQ(shoelace_area(v), Scalar(14));
  EXPECT_EQ(signed_double_area(v), Scalar(28));
  std::vector<Point> w{{1, 0}, {5, Scalar(1, 3)}, {7, 4}, {Scalar(3, 2), 6}, {-2, 3}};
  const Scalar a = shoelace_area(w);
  for (int r = 0; r < 5; ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    EXPECT_EQ(shoelace_area(w), a);
  }
  std::reverse(w.begin(), w.end());
  EXPECT_EQ(shoelace_area(w), a);
  EXPECT_EQ(signed_double_area(w), -2 * a);
}

TEST(Midpoint, Exact) {
  EXPECT_EQ(midpoint({0, 0}, {1, 3}), (Point{Scalar(1, 2), Scalar(3, 2)}));
}
