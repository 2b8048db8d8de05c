#include "jsweep/horizontal_sweep.hpp"

#include <algorithm>

namespace jsweep {

namespace {

Scalar y_on(const Polygon& poly, std::size_t edge, const Scalar& x) {
  // Callers only evaluate edges at abscissas inside their closed x-range.
  return *edge_y_at_x(poly.edge(edge), x);
}

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidSegment, why); }

void check_end(const Polygon& poly, const HSegment& t, const SegmentEnd& end, const Scalar& x,
               const char* which) {
  if (end.kind == SegmentEnd::Kind::OnJ) {
    if (!end.on_j || !(poly.point_at(*end.on_j) == Point{x, t.y})) {
      invalid(std::string(which) + " end is not the J point at " + format_point({x, t.y}));
    }
    return;
  }
  if (!end.wall) invalid(std::string(which) + " end has no wall");
  const VSegment& w = end.wall->seg;
  if (w.x != x || !(w.y_lo < t.y && t.y < w.y_hi)) {
    invalid(std::string(which) + " end does not attach inside wall " + std::to_string(end.wall->id));
  }
}

// Nearest edges above and below height y at abscissa s (s not a vertex abscissa).
std::pair<std::size_t, std::size_t> chord_edges(const Polygon& poly, const Scalar& s, const Scalar& y) {
  std::optional<Scalar> above, below;
  std::size_t above_edge = 0, below_edge = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Edge e = poly.edge(i);
    if (!(e.x_min() < s && s < e.x_max())) continue;
    Scalar v = y_on(poly, i, s);
    if (v > y) {
      if (!above || v < *above) above = v, above_edge = i;
    } else if (v < y) {
      if (!below || v > *below) below = v, below_edge = i;
    } else {
      invalid("segment at y = " + format_scalar(y) + " crosses edge " + std::to_string(i));
    }
  }
  if (!above || !below) {
    throw Error(ErrorKind::Unbounded, "chord at x = " + format_scalar(s) + " through y = " +
                                          format_scalar(y) + " escapes the curve");
  }
  return {above_edge, below_edge};
}

void coalesce(std::vector<Span>& spans) {
  std::vector<Span> out;
  for (auto& s : spans) {
    if (!out.empty() && out.back().edge == s.edge) {
      out.back().x_hi = s.x_hi;
    } else {
      out.push_back(std::move(s));
    }
  }
  spans = std::move(out);
}

SweepWall make_wall(const Polygon& poly, const Scalar& x, const Scalar& lo, std::size_t lo_edge,
                    const Scalar& hi, std::size_t hi_edge, Side swept, SweepWall::Kind kind) {
  SweepWall w;
  w.seg = VSegment{x, lo, hi, poly.locate(lo_edge, {x, lo}), poly.locate(hi_edge, {x, hi})};
  w.swept_side = swept;
  w.kind = kind;
  return w;
}

// Jump walls where consecutive spans of one envelope disagree.
void jump_walls(const Polygon& poly, const Envelope& env, std::vector<SweepWall>& out) {
  for (std::size_t k = 0; k + 1 < env.spans.size(); ++k) {
    const Scalar& bx = env.spans[k].x_hi;
    std::size_t el = env.spans[k].edge, er = env.spans[k + 1].edge;
    Scalar vl = y_on(poly, el, bx), vr = y_on(poly, er, bx);
    if (vl == vr) continue;
    // The taller chord is on the swept side.
    bool right_taller = env.side == EnvelopeSide::Upper ? vr > vl : vr < vl;
    Side swept = right_taller ? Side::Right : Side::Left;
    if (vl < vr) {
      out.push_back(make_wall(poly, bx, vl, el, vr, er, swept, SweepWall::Kind::Jump));
    } else {
      out.push_back(make_wall(poly, bx, vr, er, vl, el, swept, SweepWall::Kind::Jump));
    }
  }
}

// Walls on the vertical chord limit at one end of t, split at the cut points.
void end_walls(const Polygon& poly, const HSegment& t, const SegmentEnd& end, const Scalar& x,
               std::size_t lower_edge, std::size_t upper_edge, Side swept,
               std::vector<SweepWall>& out) {
  Scalar lo = y_on(poly, lower_edge, x);
  Scalar hi = y_on(poly, upper_edge, x);
  PointOnJ lo_on = poly.locate(lower_edge, {x, lo});
  PointOnJ hi_on = poly.locate(upper_edge, {x, hi});

  struct Cut {
    Scalar y;
    PointOnJ on;
  };
  std::vector<Cut> cuts{{lo, lo_on}};
  std::optional<int> attached;
  std::size_t attached_piece = 0;
  if (end.kind == SegmentEnd::Kind::OnJ) {
    cuts.push_back({t.y, *end.on_j});
  } else {
    const AttachedWall& w = *end.wall;
    if (w.seg.y_lo < lo || w.seg.y_hi > hi || !w.seg.lo_on || !w.seg.hi_on) {
      throw Error(ErrorKind::AttachMismatch,
                  "chord (" + format_scalar(lo) + ", " + format_scalar(hi) + ") at x = " +
                      format_scalar(x) + " does not contain wall " + std::to_string(w.id));
    }
    cuts.push_back({w.seg.y_lo, *w.seg.lo_on});
    attached_piece = cuts.size() - 1;
    cuts.push_back({w.seg.y_hi, *w.seg.hi_on});
    attached = w.id;
  }
  cuts.push_back({hi, hi_on});

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (!(cuts[k].y < cuts[k + 1].y)) continue;
    SweepWall w;
    w.seg = VSegment{x, cuts[k].y, cuts[k + 1].y, cuts[k].on, cuts[k + 1].on};
    w.swept_side = swept;
    w.kind = SweepWall::Kind::End;
    if (attached && k == attached_piece) w.attached_id = attached;
    out.push_back(std::move(w));
  }
}

}  // namespace

Scalar Envelope::value_at(const Polygon& poly, const Scalar& x) const {
  auto it = std::lower_bound(spans.begin(), spans.end(), x,
                             [](const Span& s, const Scalar& v) { return s.x_hi < v; });
  Scalar v = y_on(poly, it->edge, x);
  if (it->x_hi == x && std::next(it) != spans.end()) {
    Scalar w = y_on(poly, std::next(it)->edge, x);
    if (side == EnvelopeSide::Upper ? w < v : w > v) v = w;
  }
  return v;
}

Sweep build_sweep(const Polygon& poly, const HSegment& t, int step_id) {
  if (!(t.x_lo < t.x_hi)) invalid("empty x-span");
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto x = edge_x_at_y(poly.edge(i), t.y);
    if (x && t.x_lo < *x && *x < t.x_hi) {
      invalid("segment crosses edge " + std::to_string(i) + " at x = " + format_scalar(*x));
    }
  }
  check_end(poly, t, t.lo_end, t.x_lo, "lo");
  check_end(poly, t, t.hi_end, t.x_hi, "hi");

  std::vector<Scalar> cuts{t.x_lo};
  {
    std::vector<Scalar> inner;
    for (const Point& v : poly.vertices()) {
      if (t.x_lo < v.x && v.x < t.x_hi) inner.push_back(v.x);
    }
    std::sort(inner.begin(), inner.end());
    cuts.insert(cuts.end(), inner.begin(), inner.end());
  }
  cuts.push_back(t.x_hi);

  Sweep s;
  s.t = t;
  s.step_id = step_id;
  s.upper.side = EnvelopeSide::Upper;
  s.lower.side = EnvelopeSide::Lower;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Scalar mid = (cuts[k] + cuts[k + 1]) / 2;
    auto [up, down] = chord_edges(poly, mid, t.y);
    s.upper.spans.push_back({cuts[k], cuts[k + 1], up});
    s.lower.spans.push_back({cuts[k], cuts[k + 1], down});
  }

  // Trapezoids over the uncoalesced partition; each piece is bounded by one
  // upper and one lower edge.
  for (std::size_t k = 0; k < s.upper.spans.size(); ++k) {
    const Span& u = s.upper.spans[k];
    const Span& l = s.lower.spans[k];
    Scalar left = y_on(poly, u.edge, u.x_lo) - y_on(poly, l.edge, u.x_lo);
    Scalar right = y_on(poly, u.edge, u.x_hi) - y_on(poly, l.edge, u.x_hi);
    s.area += (u.x_hi - u.x_lo) * (left + right) / 2;
  }

  coalesce(s.upper.spans);
  coalesce(s.lower.spans);

  end_walls(poly, t, t.lo_end, t.x_lo, s.lower.spans.front().edge, s.upper.spans.front().edge,
            Side::Right, s.walls);
  jump_walls(poly, s.upper, s.walls);
  jump_walls(poly, s.lower, s.walls);
  end_walls(poly, t, t.hi_end, t.x_hi, s.lower.spans.back().edge, s.upper.spans.back().edge,
            Side::Left, s.walls);

  for (const auto& piece : sweep_boundary(poly, s)) {
    if (piece.kind == BoundaryPiece::Kind::Arc) s.arcs.push_back(piece);
  }
  return s;
}

BoundaryPiece join_arcs(const Polygon& poly, const BoundaryPiece& a, const BoundaryPiece& b) {
  BoundaryPiece out;
  out.kind = BoundaryPiece::Kind::Arc;
  out.from = a.from;
  out.to = b.to;
  if (out.from == out.to) {
    Traversal dir = poly.interior_on_right();
    out.full = a.full || b.full || poly.travel(a.from, a.to, dir) > 0 ||
               poly.travel(b.from, b.to, dir) > 0;
  }
  return out;
}

void normalize_cycle(const Polygon& poly, Cycle& cycle) {
  using Kind = BoundaryPiece::Kind;
  Cycle out;
  for (auto& p : cycle) {
    if (p.kind == Kind::Arc && !out.empty() && out.back().kind == Kind::Arc) {
      out.back() = join_arcs(poly, out.back(), p);
    } else {
      out.push_back(std::move(p));
    }
  }
  if (out.size() > 1 && out.front().kind == Kind::Arc && out.back().kind == Kind::Arc) {
    out.front() = join_arcs(poly, out.back(), out.front());
    out.pop_back();
  }
  Cycle separated;
  for (std::size_t i = 0; i < out.size(); ++i) {
    separated.push_back(out[i]);
    const auto& next = out[(i + 1) % out.size()];
    if (out[i].kind == Kind::Wall && next.kind == Kind::Wall) {
      BoundaryPiece point;
      point.kind = Kind::Arc;
      point.from = point.to = out[i].to;
      separated.push_back(point);
    }
  }
  cycle = std::move(separated);
}

Cycle sweep_boundary(const Polygon& poly, const Sweep& s) {
  using Kind = BoundaryPiece::Kind;
  Cycle cycle;
  auto add_arc = [&](std::size_t edge, const Scalar& x0, const Scalar& x1) {
    BoundaryPiece p;
    p.kind = Kind::Arc;
    p.from = poly.locate(edge, {x0, y_on(poly, edge, x0)});
    p.to = poly.locate(edge, {x1, y_on(poly, edge, x1)});
    cycle.push_back(std::move(p));
  };
  auto add_wall = [&](std::size_t index) {
    const SweepWall& w = s.walls[index];
    BoundaryPiece p;
    p.kind = Kind::Wall;
    p.wall = static_cast<int>(index);
    p.upward = w.swept_side == Side::Right;
    p.from = p.upward ? *w.seg.lo_on : *w.seg.hi_on;
    p.to = p.upward ? *w.seg.hi_on : *w.seg.lo_on;
    cycle.push_back(std::move(p));
  };
  auto walls_at = [&](const Scalar& x, SweepWall::Kind kind, bool ascending) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s.walls.size(); ++i) {
      if (s.walls[i].kind == kind && s.walls[i].seg.x == x) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ascending ? s.walls[a].seg.y_lo < s.walls[b].seg.y_lo
                       : s.walls[a].seg.y_lo > s.walls[b].seg.y_lo;
    });
    return idx;
  };

  for (std::size_t i : walls_at(s.t.x_lo, SweepWall::Kind::End, true)) add_wall(i);
  for (std::size_t k = 0; k < s.upper.spans.size(); ++k) {
    const Span& sp = s.upper.spans[k];
    add_arc(sp.edge, sp.x_lo, sp.x_hi);
    if (k + 1 < s.upper.spans.size()) {
      for (std::size_t i : walls_at(sp.x_hi, SweepWall::Kind::Jump, true)) add_wall(i);
    }
  }
  for (std::size_t i : walls_at(s.t.x_hi, SweepWall::Kind::End, false)) add_wall(i);
  for (std::size_t k = s.lower.spans.size(); k-- > 0;) {
    const Span& sp = s.lower.spans[k];
    add_arc(sp.edge, sp.x_hi, sp.x_lo);
    if (k > 0) {
      for (std::size_t i : walls_at(sp.x_lo, SweepWall::Kind::Jump, true)) add_wall(i);
    }
  }
  normalize_cycle(poly, cycle);
  return cycle;
}

}  // namespace jsweep
