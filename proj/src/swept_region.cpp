#include "jsweep/swept_region.hpp"

#include <algorithm>
#include <cmath>

namespace jsweep {

namespace {

constexpr std::size_t kBucketCount = 1024;

}  // namespace

bool WallOrder::operator()(const Wall& a, const Wall& b) const {
  int c = cmp(a.seg.length(), b.seg.length());
  if (c != 0) return c > 0;
  if (a.seg.x != b.seg.x) return a.seg.x < b.seg.x;
  if (a.seg.y_lo != b.seg.y_lo) return a.seg.y_lo < b.seg.y_lo;
  return a.id < b.id;
}

bool sweep_contains(const Polygon& poly, const Sweep& s, const Point& p) {
  if (!(s.t.x_lo < p.x && p.x < s.t.x_hi)) return false;
  return s.lower.value_at(poly, p.x) < p.y && p.y < s.upper.value_at(poly, p.x);
}

Region Region::init(const Polygon& poly, Sweep s, Point seed) {
  Region r(poly);
  r.seed_ = std::move(seed);
  const BBox& box = poly.bbox();
  r.bucket_x0_ = to_double(box.x_min);
  r.bucket_width_ = (to_double(box.x_max) - r.bucket_x0_) / kBucketCount;
  r.buckets_.assign(kBucketCount, {});

  Cycle pieces = sweep_boundary(poly, s);
  std::vector<int> ids(s.walls.size());
  for (std::size_t i = 0; i < s.walls.size(); ++i) {
    Wall w{s.walls[i].seg, r.next_wall_id_++, 0, s.step_id, s.walls[i].swept_side};
    ids[i] = w.id;
    r.index_.insert(w);
    r.walls_.emplace(w.id, std::move(w));
  }
  BoundaryCycle cycle{r.next_cycle_id_++, std::move(pieces)};
  for (auto& p : cycle.pieces) {
    if (p.kind == BoundaryPiece::Kind::Wall) p.wall = ids[static_cast<std::size_t>(p.wall)];
  }
  r.cycles_.emplace(cycle.id, std::move(cycle));
  r.add_sweep(std::move(s));
  return r;
}

void Region::add_sweep(Sweep s) {
  area_ += s.area;
  std::size_t index = sweeps_.size();
  auto bucket_of = [&](const Scalar& x) {
    double b = std::floor((to_double(x) - bucket_x0_) / bucket_width_);
    return static_cast<long>(b);
  };
  long lo = std::max(0L, bucket_of(s.t.x_lo) - 1);
  long hi = std::min(static_cast<long>(kBucketCount) - 1, bucket_of(s.t.x_hi) + 1);
  for (long b = lo; b <= hi; ++b) buckets_[static_cast<std::size_t>(b)].push_back(index);
  sweeps_.push_back(std::move(s));
}

std::optional<Wall> Region::max_wall() const {
  if (index_.empty()) return std::nullopt;
  return *index_.begin();
}

std::vector<std::size_t> Region::sweeps_containing(const Point& p) const {
  std::vector<std::size_t> out;
  double b = std::floor((to_double(p.x) - bucket_x0_) / bucket_width_);
  if (!(b >= 0 && b < static_cast<double>(kBucketCount))) return out;
  for (std::size_t i : buckets_[static_cast<std::size_t>(b)]) {
    if (sweep_contains(*poly_, sweeps_[i], p)) out.push_back(i);
  }
  return out;
}

bool Region::contains(const Point& p) const { return !sweeps_containing(p).empty(); }

CycleEvent cancel_wall_pair(const Polygon& poly, std::map<int, BoundaryCycle>& cycles, int id,
                            int& next_cycle_id) {
  struct Hit {
    int cycle;
    std::size_t pos;
  };
  std::vector<Hit> hits;
  for (const auto& [cid, c] : cycles) {
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      if (c.pieces[i].kind == BoundaryPiece::Kind::Wall && c.pieces[i].wall == id) hits.push_back({cid, i});
    }
  }
  if (hits.size() != 2) {
    throw Error(ErrorKind::AttachMismatch,
                "wall " + std::to_string(id) + " appears " + std::to_string(hits.size()) +
                    " times on the boundary, expected 2");
  }
  auto keep = [](const Cycle& c) { return !c.empty() && !(c.size() == 1 && c.front().degenerate_arc()); };

  if (hits[0].cycle == hits[1].cycle) {
    Cycle all = std::move(cycles.at(hits[0].cycle).pieces);
    cycles.erase(hits[0].cycle);
    const auto i = static_cast<long>(std::min(hits[0].pos, hits[1].pos));
    const auto j = static_cast<long>(std::max(hits[0].pos, hits[1].pos));
    Cycle inner(all.begin() + i + 1, all.begin() + j);
    Cycle outer(all.begin() + j + 1, all.end());
    outer.insert(outer.end(), all.begin(), all.begin() + i);
    int parts = 0;
    for (Cycle* part : {&outer, &inner}) {
      normalize_cycle(poly, *part);
      if (!keep(*part)) continue;
      int cid = parts == 0 ? hits[0].cycle : next_cycle_id++;
      cycles.emplace(cid, BoundaryCycle{cid, std::move(*part)});
      ++parts;
    }
    return parts == 2 ? CycleEvent::Split : CycleEvent::None;
  }

  const Cycle& a = cycles.at(hits[0].cycle).pieces;
  const Cycle& b = cycles.at(hits[1].cycle).pieces;
  const auto pa = static_cast<long>(hits[0].pos);
  const auto pb = static_cast<long>(hits[1].pos);
  Cycle merged(a.begin() + pa + 1, a.end());
  merged.insert(merged.end(), a.begin(), a.begin() + pa);
  merged.insert(merged.end(), b.begin() + pb + 1, b.end());
  merged.insert(merged.end(), b.begin(), b.begin() + pb);
  normalize_cycle(poly, merged);
  const int keep_id = std::min(hits[0].cycle, hits[1].cycle);
  cycles.erase(hits[0].cycle);
  cycles.erase(hits[1].cycle);
  if (keep(merged)) cycles.emplace(keep_id, BoundaryCycle{keep_id, std::move(merged)});
  return CycleEvent::Merge;
}

CycleEvent Region::cancel(int id) {
  CycleEvent event = cancel_wall_pair(*poly_, cycles_, id, next_cycle_id_);
  for (const auto& [cid, c] : cycles_) {
    for (const auto& p : c.pieces) {
      if (p.kind != BoundaryPiece::Kind::Wall) continue;
      if (auto it = walls_.find(p.wall); it != walls_.end()) it->second.cycle_id = cid;
    }
  }
  return event;
}

SpliceResult Region::splice_merge(Sweep s, int near_id, std::optional<int> far_id) {
  if (far_id && *far_id == near_id) {
    throw Error(ErrorKind::AttachMismatch, "near and far wall coincide");
  }
  std::vector<int> expected{near_id};
  if (far_id) expected.push_back(*far_id);
  std::vector<int> found;
  for (const auto& w : s.walls) {
    if (!w.attached_id) continue;
    auto it = walls_.find(*w.attached_id);
    if (it == walls_.end() || !it->second.seg.same_segment(w.seg) ||
        it->second.swept_side == w.swept_side) {
      throw Error(ErrorKind::AttachMismatch,
                  "sweep end does not match region wall " + std::to_string(*w.attached_id));
    }
    found.push_back(*w.attached_id);
  }
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  if (expected != found) {
    throw Error(ErrorKind::AttachMismatch, "sweep ends are not attached to the requested walls");
  }

  SpliceResult result;
  Cycle pieces = sweep_boundary(*poly_, s);
  std::vector<int> ids(s.walls.size());
  int cycle_id = next_cycle_id_++;
  for (std::size_t i = 0; i < s.walls.size(); ++i) {
    if (s.walls[i].attached_id) {
      ids[i] = *s.walls[i].attached_id;
      continue;
    }
    Wall w{s.walls[i].seg, next_wall_id_++, cycle_id, s.step_id, s.walls[i].swept_side};
    ids[i] = w.id;
    index_.insert(w);
    result.walls_added.push_back(w);
    walls_.emplace(w.id, std::move(w));
  }
  for (auto& p : pieces) {
    if (p.kind == BoundaryPiece::Kind::Wall) p.wall = ids[static_cast<std::size_t>(p.wall)];
  }
  cycles_.emplace(cycle_id, BoundaryCycle{cycle_id, std::move(pieces)});

  cancel(near_id);
  if (far_id) result.event = cancel(*far_id);

  for (int id : expected) {
    auto it = walls_.find(id);
    result.walls_removed.push_back(it->second);
    index_.erase(it->second);
    walls_.erase(it);
  }
  add_sweep(std::move(s));
  return result;
}

}  // namespace jsweep
