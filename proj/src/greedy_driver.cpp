#include "jsweep/greedy_driver.hpp"

#include <charconv>
#include <iterator>

namespace jsweep {

std::string_view to_string(HaltReason r) {
  switch (r) {
    case HaltReason::EmptyWallSet: return "EmptyWallSet";
    case HaltReason::EpsilonReached: return "EpsilonReached";
    case HaltReason::MaxSteps: return "MaxSteps";
  }
  return "?";
}

std::string_view to_string(CycleEvent e) {
  switch (e) {
    case CycleEvent::None: return "none";
    case CycleEvent::Split: return "split";
    case CycleEvent::Merge: return "merge";
  }
  return "?";
}

Strategy Strategy::parse(std::string_view text) {
  if (text == "greedy") return {StrategyKind::Greedy, 0};
  if (text == "fifo") return {StrategyKind::Fifo, 0};
  if (text == "lifo") return {StrategyKind::Lifo, 0};
  if (text == "random") return {StrategyKind::Random, 0};
  constexpr std::string_view prefix = "random:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return {StrategyKind::Random, seed};
    }
  }
  throw Error(ErrorKind::ParseError, "unknown strategy '" + std::string(text) + "'");
}

std::string Strategy::name() const {
  switch (kind) {
    case StrategyKind::Greedy: return "greedy";
    case StrategyKind::Fifo: return "fifo";
    case StrategyKind::Lifo: return "lifo";
    case StrategyKind::Random: return "random:" + std::to_string(seed);
  }
  return "?";
}

HSegment initial_segment(const Polygon& poly, const Point& seed) {
  std::optional<HorizontalHit> left, right;
  try {
    left = first_hit_horizontal(poly, seed, HDir::Left);
    right = first_hit_horizontal(poly, seed, HDir::Right);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PointOnCurve) throw Error(ErrorKind::SeedOnCurve, format_point(seed));
    throw;
  }
  if (!left || !right) {
    throw Error(ErrorKind::UnboundedFace, "horizontal line through seed " + format_point(seed) +
                                              " leaves the bounding box");
  }
  return HSegment{seed.y, left->x, right->x, SegmentEnd::on_curve(left->on),
                  SegmentEnd::on_curve(right->on)};
}

std::pair<HSegment, Terminus> extend_from_wall(const Polygon& poly, const Region& region, const Wall& w) {
  const Point m = w.seg.mid_point();
  const HDir dir = w.swept_side == Side::Left ? HDir::Right : HDir::Left;
  auto ahead = [&](const Scalar& x) { return dir == HDir::Right ? x > m.x : x < m.x; };

  auto j_hit = first_hit_horizontal(poly, m, dir);

  const Wall* blocker = nullptr;
  for (const auto& [id, other] : region.walls()) {
    if (id == w.id) continue;
    if (!(other.seg.y_lo < m.y && m.y < other.seg.y_hi)) continue;
    if (other.seg.x == m.x) {
      throw Error(ErrorKind::NoExtension, "wall " + std::to_string(id) + " overlaps wall " +
                                              std::to_string(w.id) + " at its midpoint");
    }
    if (!ahead(other.seg.x)) continue;
    if (!blocker || (dir == HDir::Right ? other.seg.x < blocker->seg.x : other.seg.x > blocker->seg.x)) {
      blocker = &other;
    }
  }
  if (blocker && j_hit && !(dir == HDir::Right ? blocker->seg.x < j_hit->x : blocker->seg.x > j_hit->x)) {
    blocker = nullptr;
  }
  if (!blocker && !j_hit) {
    throw Error(ErrorKind::UnboundedFace, "extension from " + format_point(m) + " leaves the bounding box");
  }

  Terminus term;
  SegmentEnd near_end = SegmentEnd::at_wall({w.id, w.seg});
  SegmentEnd far_end;
  Scalar far_x;
  if (blocker) {
    // The far wall must face the unswept side we are travelling through.
    Side needed = dir == HDir::Right ? Side::Right : Side::Left;
    if (blocker->swept_side != needed) {
      throw Error(ErrorKind::NoExtension,
                  "extension from wall " + std::to_string(w.id) + " reaches the swept side of wall " +
                      std::to_string(blocker->id));
    }
    term.kind = Terminus::Kind::OnWall;
    term.wall_id = blocker->id;
    far_x = blocker->seg.x;
    far_end = SegmentEnd::at_wall({blocker->id, blocker->seg});
  } else {
    term.kind = Terminus::Kind::OnJ;
    term.on_j = j_hit->on;
    far_x = j_hit->x;
    far_end = SegmentEnd::on_curve(j_hit->on);
  }
  term.hit = Point{far_x, m.y};
  if (far_x == m.x) throw Error(ErrorKind::NoExtension, "zero-length extension at " + format_point(m));

  HSegment t;
  t.y = m.y;
  if (dir == HDir::Right) {
    t.x_lo = m.x, t.x_hi = far_x;
    t.lo_end = std::move(near_end), t.hi_end = std::move(far_end);
  } else {
    t.x_lo = far_x, t.x_hi = m.x;
    t.lo_end = std::move(far_end), t.hi_end = std::move(near_end);
  }
  return {std::move(t), std::move(term)};
}

GreedyDriver::GreedyDriver(const Polygon& poly, const Point& seed, Config cfg)
    : poly_(&poly), cfg_(std::move(cfg)), rng_(cfg_.strategy.seed) {
  initial_t_ = initial_segment(poly, seed);
  Sweep first = build_sweep(poly, initial_t_, 1);
  region_.emplace(Region::init(poly, std::move(first), seed));
  for (const auto& [id, w] : region_->walls()) initial_walls_.push_back(w);
  tree_.nodes.push_back(TreeNode{1, std::nullopt, {}});
}

std::optional<HaltReason> GreedyDriver::halt_check() const {
  if (region_->wall_index().empty()) return HaltReason::EmptyWallSet;
  if (cfg_.eps > 0 && region_->max_wall()->length() < cfg_.eps) return HaltReason::EpsilonReached;
  if (sweep_count() >= cfg_.max_steps) return HaltReason::MaxSteps;
  return std::nullopt;
}

Wall GreedyDriver::select() {
  const auto& walls = region_->walls();
  switch (cfg_.strategy.kind) {
    case StrategyKind::Greedy: return *region_->max_wall();
    case StrategyKind::Fifo: return walls.begin()->second;
    case StrategyKind::Lifo: return walls.rbegin()->second;
    case StrategyKind::Random: {
      auto k = static_cast<long>(rng_() % walls.size());
      return std::next(walls.begin(), k)->second;
    }
  }
  return *region_->max_wall();
}

std::variant<HaltReason, StepRecord> GreedyDriver::step() {
  if (auto reason = halt_check()) return *reason;

  Wall used = select();
  auto [t, term] = extend_from_wall(*poly_, *region_, used);
  const int step_id = sweep_count() + 1;
  Sweep s = build_sweep(*poly_, t, step_id);
  std::optional<int> far;
  if (term.kind == Terminus::Kind::OnWall) far = term.wall_id;
  SpliceResult spliced = region_->splice_merge(std::move(s), used.id, far);

  StepRecord rec;
  rec.step = step_id;
  rec.midpoint = used.seg.mid_point();
  rec.wall_used = std::move(used);
  rec.t = std::move(t);
  rec.terminus = std::move(term);
  rec.walls_added = std::move(spliced.walls_added);
  rec.walls_removed = std::move(spliced.walls_removed);
  rec.cycle_event = spliced.event;
  rec.area_after = region_->area();
  if (auto mw = region_->max_wall()) rec.max_wall_after = mw->length();

  tree_.nodes.push_back(TreeNode{step_id, rec.wall_used.origin_step, {}});
  tree_.nodes.at(static_cast<std::size_t>(rec.wall_used.origin_step - 1)).children.push_back(step_id);
  trace_.push_back(rec);
  return rec;
}

RunResult GreedyDriver::finish(HaltReason reason) && {
  int count = sweep_count();
  return RunResult{std::move(*region_), std::move(tree_),         cfg_,  std::move(initial_t_),
                   std::move(initial_walls_), std::move(trace_), reason, count};
}

RunResult run(const Polygon& poly, const Point& seed, const Config& cfg) {
  GreedyDriver driver(poly, seed, cfg);
  for (;;) {
    auto outcome = driver.step();
    if (auto* reason = std::get_if<HaltReason>(&outcome)) return std::move(driver).finish(*reason);
  }
}

}  // namespace jsweep
