#pragma once

// Exact rational kernel: scalars, points, directed edges and the handful of
// predicates the sweep machinery is built on. Nothing here touches floating
// point except the explicit `to_double` used for rendering and bucketing.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace jsweep {

using Scalar = mpq_class;

/// Parses an integer ("-3"), a finite decimal ("0.125", "-2.5e-3" is rejected)
/// or a reduced-or-not fraction ("6/4"). Throws Error{ParseError}.
Scalar parse_scalar(std::string_view text);

/// Canonical "num/den" rendering; integers render as "num/1".
std::string format_scalar(const Scalar& value);

double to_double(const Scalar& value);

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

std::string format_point(const Point& p);

/// Directed segment a -> b.
struct Edge {
  Point a;
  Point b;

  const Scalar& x_min() const { return a.x < b.x ? a.x : b.x; }
  const Scalar& x_max() const { return a.x < b.x ? b.x : a.x; }
  const Scalar& y_min() const { return a.y < b.y ? a.y : b.y; }
  const Scalar& y_max() const { return a.y < b.y ? b.y : a.y; }
};

/// Sign of (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c);

/// y of a non-vertical edge at abscissa x, if x lies in the closed x-range.
std::optional<Scalar> edge_y_at_x(const Edge& e, const Scalar& x);

/// x of a non-horizontal edge at ordinate y, if y lies in the closed y-range.
std::optional<Scalar> edge_x_at_y(const Edge& e, const Scalar& y);

/// True iff p lies on the closed segment e.
bool on_edge(const Edge& e, const Point& p);

/// |signed shoelace sum| / 2.
Scalar shoelace_area(std::span<const Point> vertices);

Scalar signed_double_area(std::span<const Point> vertices);

Point midpoint(const Point& a, const Point& b);

}  // namespace jsweep
