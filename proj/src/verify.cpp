#include "jsweep/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jsweep {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string Report::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) out << ": " << c.witness;
    out << "\n";
  }
  return out.str();
}

namespace {

Scalar halton(std::uint64_t index, unsigned base) {
  Scalar value, scale(1);
  while (index > 0) {
    scale /= base;
    value += scale * static_cast<unsigned long>(index % base);
    index /= base;
  }
  return value;
}

std::string wall_label(const Wall& w) {
  return "wall " + std::to_string(w.id) + " x=" + format_scalar(w.seg.x) + " (" +
         format_scalar(w.seg.y_lo) + ", " + format_scalar(w.seg.y_hi) + ")";
}

// Empty string when the wall satisfies every on-curve condition.
std::string wall_defect(const Polygon& poly, const Wall& w) {
  const VSegment& s = w.seg;
  if (!(s.y_lo < s.y_hi)) return "non-positive length";
  if (classify(poly, s.lo_point()) != Location::On) return "lower endpoint off the curve";
  if (classify(poly, s.hi_point()) != Location::On) return "upper endpoint off the curve";
  if (!s.lo_on || !(poly.point_at(*s.lo_on) == s.lo_point())) return "lower address mismatch";
  if (!s.hi_on || !(poly.point_at(*s.hi_on) == s.hi_point())) return "upper address mismatch";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto y = edge_y_at_x(poly.edge(i), s.x);
    if (y && s.y_lo < *y && *y < s.y_hi) return "interior meets edge " + std::to_string(i);
  }
  return {};
}

struct Checker {
  Report report;

  CheckResult& open(std::string name) {
    report.checks.push_back({std::move(name), true, {}});
    return report.checks.back();
  }
  static void fail(CheckResult& c, std::string witness) {
    if (c.pass) c.witness = std::move(witness);
    c.pass = false;
  }
};

}  // namespace

std::vector<Point> sample_points(const BBox& box, int count, std::uint64_t seed) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  const std::uint64_t start = 1 + seed * 100003ULL;
  Scalar w = box.x_max - box.x_min, h = box.y_max - box.y_min;
  for (int k = 0; k < count; ++k) {
    std::uint64_t i = start + static_cast<std::uint64_t>(k);
    out.push_back(Point{box.x_min + w * halton(i, 2), box.y_min + h * halton(i, 3)});
  }
  return out;
}

Report check_invariants(const RunResult& res, const Polygon& poly, const AuditOptions& opts) {
  Checker ck;
  const Region& region = res.region;

  {
    auto& c = ck.open("walls_on_curve");
    auto audit = [&](const Wall& w, const std::string& where) {
      if (auto d = wall_defect(poly, w); !d.empty()) Checker::fail(c, where + " " + wall_label(w) + ": " + d);
    };
    for (const auto& w : res.initial_walls) audit(w, "init");
    for (const auto& rec : res.trace) {
      for (const auto& w : rec.walls_added) audit(w, "step " + std::to_string(rec.step));
    }
    for (const auto& [id, w] : region.walls()) audit(w, "final");
  }

  {
    auto& c = ck.open("cycle_closure");
    std::map<int, int> seen;
    for (const auto& [cid, cycle] : region.cycles()) {
      const auto& ps = cycle.pieces;
      if (ps.empty()) Checker::fail(c, "cycle " + std::to_string(cid) + " is empty");
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto& p = ps[i];
        const auto& q = ps[(i + 1) % ps.size()];
        std::string at = "cycle " + std::to_string(cid) + " piece " + std::to_string(i);
        if (!(p.to == q.from)) Checker::fail(c, at + ": end does not meet next start");
        if (ps.size() > 1 && p.kind == BoundaryPiece::Kind::Wall && q.kind == BoundaryPiece::Kind::Wall) {
          Checker::fail(c, at + ": two adjacent walls");
        }
        if (p.kind != BoundaryPiece::Kind::Wall) continue;
        ++seen[p.wall];
        auto it = region.walls().find(p.wall);
        if (it == region.walls().end()) {
          Checker::fail(c, at + ": unknown wall " + std::to_string(p.wall));
          continue;
        }
        const Wall& w = it->second;
        bool upward = w.swept_side == Side::Right;
        const PointOnJ& from = upward ? *w.seg.lo_on : *w.seg.hi_on;
        const PointOnJ& to = upward ? *w.seg.hi_on : *w.seg.lo_on;
        if (p.upward != upward || !(p.from == from) || !(p.to == to)) {
          Checker::fail(c, at + ": orientation or endpoints disagree with " + wall_label(w));
        }
        if (w.cycle_id != cid) Checker::fail(c, at + ": " + wall_label(w) + " has stale cycle id");
      }
    }
    for (const auto& [id, n] : seen) {
      if (n != 1) Checker::fail(c, "wall " + std::to_string(id) + " appears " + std::to_string(n) + " times");
    }
  }

  {
    auto& c = ck.open("wall_index");
    std::set<int> on_cycles, indexed, stored, replayed;
    for (const auto& [cid, cycle] : region.cycles()) {
      for (const auto& p : cycle.pieces) {
        if (p.kind == BoundaryPiece::Kind::Wall) on_cycles.insert(p.wall);
      }
    }
    for (const auto& w : region.wall_index()) indexed.insert(w.id);
    for (const auto& [id, w] : region.walls()) stored.insert(id);
    for (const auto& w : res.initial_walls) replayed.insert(w.id);
    for (const auto& rec : res.trace) {
      for (const auto& w : rec.walls_removed) replayed.erase(w.id);
      for (const auto& w : rec.walls_added) replayed.insert(w.id);
    }
    if (on_cycles != indexed) Checker::fail(c, "index differs from walls on cycles");
    if (stored != indexed) Checker::fail(c, "index differs from wall table");
    if (replayed != indexed) Checker::fail(c, "trace replay differs from index");
  }

  if (res.config.strategy.kind == StrategyKind::Greedy) {
    auto& c = ck.open("greedy_dominance");
    std::map<int, Wall> present;
    for (const auto& w : res.initial_walls) present.emplace(w.id, w);
    for (const auto& rec : res.trace) {
      std::string at = "step " + std::to_string(rec.step);
      if (!present.count(rec.wall_used.id)) Checker::fail(c, at + ": used wall not present");
      for (const auto& [id, w] : present) {
        if (w.length() > rec.wall_used.length()) {
          Checker::fail(c, at + ": used length " + format_scalar(rec.wall_used.length()) + " < " +
                               wall_label(w) + " length " + format_scalar(w.length()));
          break;
        }
      }
      for (const auto& w : rec.walls_removed) present.erase(w.id);
      for (const auto& w : rec.walls_added) present.emplace(w.id, w);
    }
  }

  {
    auto& c = ck.open("step_records");
    for (const auto& rec : res.trace) {
      std::string at = "step " + std::to_string(rec.step);
      if (!(rec.midpoint == rec.wall_used.seg.mid_point())) Checker::fail(c, at + ": midpoint not exact");
      if (rec.t.y != rec.midpoint.y) Checker::fail(c, at + ": extension not at midpoint height");
      bool removed = std::any_of(rec.walls_removed.begin(), rec.walls_removed.end(),
                                 [&](const Wall& w) { return w.id == rec.wall_used.id; });
      if (!removed) Checker::fail(c, at + ": used wall not removed");
    }
  }

  {
    auto& c = ck.open("area_monotone");
    Scalar prev = region.sweeps().front().area;
    for (const auto& rec : res.trace) {
      if (!(rec.area_after > prev)) Checker::fail(c, "step " + std::to_string(rec.step) + ": area did not grow");
      prev = rec.area_after;
    }
    Scalar sum;
    for (const auto& s : region.sweeps()) sum += s.area;
    if (sum != region.area()) Checker::fail(c, "area differs from the sum of sweep areas");
    if (region.area() > shoelace_area(poly.vertices())) Checker::fail(c, "area exceeds the face area");
  }

  {
    auto& c = ck.open("recursion_tree");
    if (static_cast<int>(res.tree.nodes.size()) != res.sweep_count) Checker::fail(c, "node count != sweep count");
    for (const auto& node : res.tree.nodes) {
      if (node.parent && !(*node.parent < node.step)) {
        Checker::fail(c, "step " + std::to_string(node.step) + " has a later parent");
      }
      if (!node.parent && node.step != 1) Checker::fail(c, "non-root without parent");
    }
  }

  {
    auto& c = ck.open("halt_reason");
    bool empty = region.wall_index().empty();
    bool below = res.config.eps > 0 && !empty && region.max_wall()->length() < res.config.eps;
    switch (res.halt_reason) {
      case HaltReason::EmptyWallSet:
        if (!empty) Checker::fail(c, "EmptyWallSet with walls left");
        break;
      case HaltReason::EpsilonReached:
        if (!below) Checker::fail(c, "EpsilonReached with a wall >= eps");
        break;
      case HaltReason::MaxSteps:
        if (empty || below) Checker::fail(c, "MaxSteps although a halt condition held");
        break;
    }
  }

  {
    auto& c = ck.open("extension_disjoint");
    for (const auto& rec : res.trace) {
      std::string at = "step " + std::to_string(rec.step);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        auto x = edge_x_at_y(poly.edge(i), rec.t.y);
        if (x && rec.t.x_lo < *x && *x < rec.t.x_hi) Checker::fail(c, at + ": extension crosses edge");
      }
      const auto own = static_cast<std::size_t>(rec.step - 1);
      for (int k = 1; k <= 16; ++k) {
        Point p{rec.t.x_lo + (rec.t.x_hi - rec.t.x_lo) * Scalar(k, 17), rec.t.y};
        auto hits = region.sweeps_containing(p);
        if (hits.size() != 1 || hits.front() != own) {
          Checker::fail(c, at + ": extension point " + format_point(p) + " lies in an earlier sweep");
          break;
        }
      }
    }
  }

  auto samples = sample_points(poly.bbox(), opts.oracle_samples, opts.sample_seed);
  {
    auto& c = ck.open("oracle_agreement");
    auto& d = ck.open("sweeps_disjoint");
    for (const auto& p : samples) {
      auto hits = region.sweeps_containing(p);
      if (hits.empty()) continue;
      if (classify(poly, p) != Location::Inside) Checker::fail(c, "region point " + format_point(p) + " not inside J");
      if (hits.size() > 1) Checker::fail(d, "point " + format_point(p) + " lies in several sweeps");
    }
  }

  {
    auto& c = ck.open("chord_saturation");
    int tested = 0;
    for (const auto& p : samples) {
      if (tested >= opts.saturation_points) break;
      if (!region.contains(p)) continue;
      ++tested;
      VSegment chord = open_segment(poly, p);
      for (int k = 1; k <= 8; ++k) {
        Point q{p.x, chord.y_lo + chord.length() * Scalar(k, 9)};
        if (!region.contains(q)) {
          Checker::fail(c, "chord through " + format_point(p) + " leaves the region at " + format_point(q));
          break;
        }
      }
    }
  }

  return ck.report;
}

Scalar deficit(const RunResult& res, const Polygon& poly) {
  if (classify(poly, res.region.seed()) != Location::Inside) {
    throw Error(ErrorKind::SeedNotInside, format_point(res.region.seed()));
  }
  return shoelace_area(poly.vertices()) - res.region.area();
}

std::vector<ConvergenceRow> convergence_study(const Polygon& poly, const Point& seed,
                                              const std::vector<Scalar>& eps_list, int max_steps) {
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0) || (i > 0 && !(eps_list[i] < eps_list[i - 1]))) {
      throw Error(ErrorKind::ValidationError, "eps list must be positive and strictly decreasing");
    }
  }
  std::vector<ConvergenceRow> rows;
  for (const auto& eps : eps_list) {
    Config cfg;
    cfg.eps = eps;
    cfg.max_steps = max_steps;
    RunResult res = run(poly, seed, cfg);
    ConvergenceRow row;
    row.eps = eps;
    row.sweeps = res.sweep_count;
    row.deficit = deficit(res, poly);
    if (auto w = res.region.max_wall()) row.max_wall_final = w->length();
    row.halt = res.halt_reason;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<StrategySeries> compare_strategies(const Polygon& poly, const Point& seed,
                                               const std::vector<Strategy>& strategies,
                                               int step_budget) {
  const Scalar face = shoelace_area(poly.vertices());
  std::vector<StrategySeries> out;
  for (const auto& strategy : strategies) {
    Config cfg;
    cfg.max_steps = step_budget;
    cfg.strategy = strategy;
    RunResult res = run(poly, seed, cfg);
    StrategySeries series{strategy, {}};
    SeriesPoint first;
    first.sweeps = 1;
    first.deficit = face - res.region.sweeps().front().area;
    if (!res.initial_walls.empty()) {
      first.max_wall = std::max_element(res.initial_walls.begin(), res.initial_walls.end(),
                                        [](const Wall& a, const Wall& b) { return a.length() < b.length(); })
                           ->length();
    }
    series.points.push_back(std::move(first));
    for (const auto& rec : res.trace) {
      series.points.push_back(SeriesPoint{rec.step, face - rec.area_after, rec.max_wall_after});
    }
    out.push_back(std::move(series));
  }
  return out;
}

}  // namespace jsweep
