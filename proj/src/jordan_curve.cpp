#include "jsweep/jordan_curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jsweep {

namespace {

bool closed_segments_intersect(const Edge& e, const Edge& f) {
  int o1 = orient(e.a, e.b, f.a);
  int o2 = orient(e.a, e.b, f.b);
  int o3 = orient(f.a, f.b, e.a);
  int o4 = orient(f.a, f.b, e.b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_edge(e, f.a)) return true;
  if (o2 == 0 && on_edge(e, f.b)) return true;
  if (o3 == 0 && on_edge(f, e.a)) return true;
  if (o4 == 0 && on_edge(f, e.b)) return true;
  return false;
}

std::string vertex_label(std::size_t i, const Point& p) {
  return "v" + std::to_string(i) + format_point(p);
}

}  // namespace

ValidationResult Polygon::validate(std::vector<Point> vertices) {
  ValidationResult result;
  const std::size_t n = vertices.size();
  if (n < 3) {
    result.violations.push_back(
        {ErrorKind::TooFewVertices, "need at least 3 vertices, got " + std::to_string(n)});
    return result;
  }

  // Shared coordinates, reported once per coordinate value.
  auto report_shared = [&](auto coord, const char* axis) {
    std::map<Scalar, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[coord(vertices[i])].push_back(i);
    for (const auto& [value, members] : groups) {
      if (members.size() < 2) continue;
      std::string detail = std::string("vertices share ") + axis + " = " + format_scalar(value) + ":";
      for (std::size_t i : members) detail += " " + vertex_label(i, vertices[i]);
      result.violations.push_back({ErrorKind::DuplicateCoordinate, detail});
    }
  };
  report_shared([](const Point& p) { return p.x; }, "x");
  report_shared([](const Point& p) { return p.y; }, "y");

  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    if (a.x == b.x || a.y == b.y) {
      result.violations.push_back(
          {ErrorKind::AxisParallelEdge,
           "edge " + std::to_string(i) + " " + vertex_label(i, a) + "->" +
               vertex_label((i + 1) % n, b) + " is " + (a == b ? "degenerate" : a.y == b.y ? "horizontal" : "vertical")});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Edge e{vertices[i], vertices[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      Edge f{vertices[j], vertices[(j + 1) % n]};
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      bool bad = false;
      if (!adjacent) {
        bad = closed_segments_intersect(e, f);
      } else {
        // Adjacent edges must meet only at their shared vertex.
        const Point& shared = (j == i + 1) ? e.b : e.a;
        const Point& e_other = (j == i + 1) ? e.a : e.b;
        const Point& f_other = (j == i + 1) ? f.b : f.a;
        if (orient(shared, e_other, f_other) == 0) {
          // Collinear: they overlap unless they point in opposite directions.
          Scalar dot = (e_other.x - shared.x) * (f_other.x - shared.x) +
                       (e_other.y - shared.y) * (f_other.y - shared.y);
          bad = dot > 0;
        }
      }
      if (bad) {
        result.violations.push_back({ErrorKind::NotSimple, "edges " + std::to_string(i) + " and " +
                                                               std::to_string(j) + " intersect"});
      }
    }
  }

  if (!result.violations.empty()) return result;

  Polygon poly;
  poly.vertices_ = std::move(vertices);
  const auto& vs = poly.vertices_;
  poly.bbox_ = {vs[0].x, vs[0].x, vs[0].y, vs[0].y};
  for (const Point& p : vs) {
    if (p.x < poly.bbox_.x_min) poly.bbox_.x_min = p.x;
    if (p.x > poly.bbox_.x_max) poly.bbox_.x_max = p.x;
    if (p.y < poly.bbox_.y_min) poly.bbox_.y_min = p.y;
    if (p.y > poly.bbox_.y_max) poly.bbox_.y_max = p.y;
  }
  // Counterclockwise vertex order keeps the interior on the left going forward.
  poly.interior_on_right_ =
      signed_double_area(vs) > 0 ? Traversal::Backward : Traversal::Forward;
  result.polygon = std::move(poly);
  return result;
}

Polygon Polygon::from_vertices(std::vector<Point> vertices) {
  auto result = validate(std::move(vertices));
  if (result.polygon) return std::move(*result.polygon);
  std::ostringstream msg;
  for (std::size_t i = 0; i < result.violations.size(); ++i) {
    if (i) msg << "; ";
    msg << to_string(result.violations[i].kind) << ": " << result.violations[i].detail;
  }
  throw Error(ErrorKind::ValidationError, msg.str());
}

PointOnJ Polygon::locate(std::size_t edge_index, const Point& p) const {
  Edge e = edge(edge_index);
  Scalar t = (p.x - e.a.x) / (e.b.x - e.a.x);
  if (t == 1) return {(edge_index + 1) % size(), Scalar(0)};
  return {edge_index, t};
}

Point Polygon::point_at(const PointOnJ& q) const {
  Edge e = edge(q.edge);
  if (q.t == 0) return e.a;
  return {e.a.x + (e.b.x - e.a.x) * q.t, e.a.y + (e.b.y - e.a.y) * q.t};
}

Scalar Polygon::travel(const PointOnJ& a, const PointOnJ& b, Traversal dir) const {
  Scalar d = dir == Traversal::Forward ? Scalar(position(b) - position(a))
                                       : Scalar(position(a) - position(b));
  if (d < 0) d += static_cast<long>(size());
  return d;
}

VSegment open_segment(const Polygon& poly, const Point& p) {
  std::optional<Scalar> above, below;
  std::size_t above_edge = 0, below_edge = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto y = edge_y_at_x(poly.edge(i), p.x);
    if (!y) continue;
    if (*y == p.y) throw Error(ErrorKind::PointOnCurve, format_point(p) + " lies on edge " + std::to_string(i));
    if (*y > p.y) {
      if (!above || *y < *above) above = *y, above_edge = i;
    } else if (!below || *y > *below) {
      below = *y, below_edge = i;
    }
  }
  if (!above || !below) {
    throw Error(ErrorKind::Unbounded, "vertical line through " + format_point(p) + " has no edge " +
                                          (above ? "below" : "above"));
  }
  VSegment s{p.x, *below, *above, std::nullopt, std::nullopt};
  s.lo_on = poly.locate(below_edge, {p.x, *below});
  s.hi_on = poly.locate(above_edge, {p.x, *above});
  return s;
}

std::optional<HorizontalHit> first_hit_horizontal(const Polygon& poly, const Point& p, HDir dir) {
  std::optional<Scalar> best;
  std::size_t best_edge = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto x = edge_x_at_y(poly.edge(i), p.y);
    if (!x) continue;
    if (*x == p.x) throw Error(ErrorKind::PointOnCurve, format_point(p) + " lies on edge " + std::to_string(i));
    bool ahead = dir == HDir::Right ? *x > p.x : *x < p.x;
    if (!ahead) continue;
    bool nearer = !best || (dir == HDir::Right ? *x < *best : *x > *best);
    if (nearer) best = *x, best_edge = i;
  }
  if (!best) return std::nullopt;
  return HorizontalHit{poly.locate(best_edge, {*best, p.y}), *best};
}

std::optional<std::pair<Scalar, PointOnJ>> first_hit_vertical(const Polygon& poly, const Point& p,
                                                               bool up) {
  std::optional<Scalar> best;
  std::size_t best_edge = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto y = edge_y_at_x(poly.edge(i), p.x);
    if (!y) continue;
    bool ahead = up ? *y > p.y : *y < p.y;
    if (!ahead) continue;
    bool nearer = !best || (up ? *y < *best : *y > *best);
    if (nearer) best = *y, best_edge = i;
  }
  if (!best) return std::nullopt;
  return std::make_pair(*best, poly.locate(best_edge, {p.x, *best}));
}

Location classify(const Polygon& poly, const Point& p) {
  bool inside = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Edge e = poly.edge(i);
    if (on_edge(e, p)) return Location::On;
    // Half-open rule: count an edge iff its lower endpoint is strictly below
    // the ray and its upper endpoint is on or above it.
    if (!(e.y_min() < p.y && p.y <= e.y_max())) continue;
    auto x = edge_x_at_y(e, p.y);
    if (x && *x > p.x) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

ArcPath arc_between(const Polygon& poly, const PointOnJ& a, const PointOnJ& b, Traversal dir) {
  const long n = static_cast<long>(poly.size());
  Scalar total = poly.travel(a, b, dir);
  if (total == 0) total = n;  // a == b: the whole curve
  std::vector<std::pair<Scalar, std::size_t>> passed;
  for (long k = 0; k < n; ++k) {
    PointOnJ v{static_cast<std::size_t>(k), Scalar(0)};
    Scalar d = poly.travel(a, v, dir);
    if (d > 0 && d < total) passed.emplace_back(d, static_cast<std::size_t>(k));
  }
  std::sort(passed.begin(), passed.end());
  ArcPath path;
  path.points.push_back(a);
  for (const auto& [d, k] : passed) path.points.push_back(PointOnJ{k, Scalar(0)});
  path.points.push_back(b);
  return path;
}

}  // namespace jsweep
