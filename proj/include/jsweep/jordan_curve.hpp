#pragma once

// The polygonal Jordan curve J and the ray-shooting queries against it.
// All queries are brute force over the edge list; instances are desk scale.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jsweep/error.hpp"
#include "jsweep/exact_geom.hpp"

namespace jsweep {

struct BBox {
  Scalar x_min, x_max, y_min, y_max;

  bool contains(const Point& p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
};

/// Exact address of a point of J: edge index plus parameter t in [0, 1).
/// A vertex is always addressed as (its outgoing edge, 0).
struct PointOnJ {
  std::size_t edge = 0;
  Scalar t;

  friend bool operator==(const PointOnJ& a, const PointOnJ& b) {
    return a.edge == b.edge && a.t == b.t;
  }
};

enum class HDir { Left, Right };
enum class Traversal { Forward, Backward };
enum class Location { Inside, Outside, On };

/// Open vertical segment {x} x (y_lo, y_hi). The closure endpoints carry
/// their addresses on J when they lie on it.
struct VSegment {
  Scalar x, y_lo, y_hi;
  std::optional<PointOnJ> lo_on;
  std::optional<PointOnJ> hi_on;

  Scalar length() const { return y_hi - y_lo; }
  Point lo_point() const { return {x, y_lo}; }
  Point hi_point() const { return {x, y_hi}; }
  Point mid_point() const { return {x, (y_lo + y_hi) / 2}; }
  bool same_segment(const VSegment& o) const {
    return x == o.x && y_lo == o.y_lo && y_hi == o.y_hi;
  }
};

struct Violation {
  ErrorKind kind;
  std::string detail;
};

struct ValidationResult;

struct HorizontalHit {
  PointOnJ on;
  Scalar x;
};

/// Sub-path of J. `points` starts at the first address and ends at the last,
/// listing every vertex passed in between.
struct ArcPath {
  std::vector<PointOnJ> points;
};

class Polygon {
 public:
  /// Checks every invariant and reports all violations found.
  static ValidationResult validate(std::vector<Point> vertices);

  /// validate() that throws Error{ValidationError} listing the violations.
  static Polygon from_vertices(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  Edge edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % size()]}; }
  const BBox& bbox() const { return bbox_; }

  /// Direction of travel along J that keeps the bounded face on the right.
  Traversal interior_on_right() const { return interior_on_right_; }

  /// Canonical address of a point known to lie on edge i.
  PointOnJ locate(std::size_t edge_index, const Point& p) const;
  Point point_at(const PointOnJ& q) const;

  /// Position along J in [0, n): edge index + t.
  Scalar position(const PointOnJ& q) const { return Scalar(static_cast<long>(q.edge)) + q.t; }

  /// Travel distance (in position units) from a to b along the direction
  /// `dir`, in [0, n).
  Scalar travel(const PointOnJ& a, const PointOnJ& b, Traversal dir) const;

 private:
  Polygon() = default;

  std::vector<Point> vertices_;
  BBox bbox_;
  Traversal interior_on_right_ = Traversal::Backward;
};

struct ValidationResult {
  std::optional<Polygon> polygon;  // engaged iff violations is empty
  std::vector<Violation> violations;
};

/// Maximal open vertical segment through p that misses J.
/// Throws PointOnCurve or Unbounded.
VSegment open_segment(const Polygon& poly, const Point& p);

/// Nearest crossing of the horizontal ray from p with J. Throws PointOnCurve.
std::optional<HorizontalHit> first_hit_horizontal(const Polygon& poly, const Point& p, HDir dir);

/// Nearest crossing of the vertical ray from p (upwards when `up`).
/// Returns the hit ordinate and address. p must not be on J.
std::optional<std::pair<Scalar, PointOnJ>> first_hit_vertical(const Polygon& poly, const Point& p,
                                                               bool up);

/// Even-odd classification, exact.
Location classify(const Polygon& poly, const Point& p);

/// Sub-path of J from a to b in the given traversal direction. Requires a != b.
ArcPath arc_between(const Polygon& poly, const PointOnJ& a, const PointOnJ& b, Traversal dir);

}  // namespace jsweep
