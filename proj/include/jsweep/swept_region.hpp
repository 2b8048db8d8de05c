#pragma once

// The growing swept region E: its sweeps, its boundary as a set of
// piecewise-vertical cycles, and the ordered index over its walls.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "jsweep/horizontal_sweep.hpp"

namespace jsweep {

struct Wall {
  VSegment seg;
  int id = -1;
  int cycle_id = -1;
  int origin_step = 0;
  Side swept_side = Side::Left;

  Scalar length() const { return seg.length(); }
};

struct BoundaryCycle {
  int id = -1;
  Cycle pieces;  // wall pieces carry region wall ids
};

enum class CycleEvent { None, Split, Merge };

struct SpliceResult {
  std::vector<Wall> walls_added;
  std::vector<Wall> walls_removed;
  CycleEvent event = CycleEvent::None;
};

/// Removes the two oppositely traversed copies of wall `id` from `cycles`.
/// Copies on different cycles merge those cycles into one (keeping the
/// smaller id); copies on one cycle split it in two (the second part gets
/// `next_cycle_id++`). Parts that collapse to a single point are dropped.
/// Throws AttachMismatch unless exactly two copies exist.
CycleEvent cancel_wall_pair(const Polygon& poly, std::map<int, BoundaryCycle>& cycles, int id,
                            int& next_cycle_id);

/// Greedy order: length descending, then x ascending, then y_lo ascending.
struct WallOrder {
  bool operator()(const Wall& a, const Wall& b) const;
};

class Region {
 public:
  /// Region consisting of the single sweep `s`.
  static Region init(const Polygon& poly, Sweep s, Point seed);

  const std::vector<Sweep>& sweeps() const { return sweeps_; }
  const std::map<int, BoundaryCycle>& cycles() const { return cycles_; }
  const std::map<int, Wall>& walls() const { return walls_; }
  const std::set<Wall, WallOrder>& wall_index() const { return index_; }
  const Scalar& area() const { return area_; }
  const Point& seed() const { return seed_; }

  const Wall& wall(int id) const { return walls_.at(id); }
  std::optional<Wall> max_wall() const;

  /// Attaches sweep `s` whose ends are AtWall(near) and, optionally,
  /// AtWall(far). Throws AttachMismatch when the attachments disagree.
  SpliceResult splice_merge(Sweep s, int near_id, std::optional<int> far_id);

  /// True iff p lies on an open chord of some sweep.
  bool contains(const Point& p) const;

  /// Indices of all sweeps whose chord set holds p (at most one if the
  /// region is well formed).
  std::vector<std::size_t> sweeps_containing(const Point& p) const;

 private:
  Region(const Polygon& poly) : poly_(&poly) {}

  void add_sweep(Sweep s);
  CycleEvent cancel(int id);

  const Polygon* poly_;
  std::vector<Sweep> sweeps_;
  std::map<int, BoundaryCycle> cycles_;
  std::map<int, Wall> walls_;
  std::set<Wall, WallOrder> index_;
  Scalar area_;
  Point seed_;
  int next_wall_id_ = 0;
  int next_cycle_id_ = 0;

  // Coarse x-buckets over the bbox for point location.
  std::vector<std::vector<std::size_t>> buckets_;
  double bucket_x0_ = 0, bucket_width_ = 1;
};

bool sweep_contains(const Polygon& poly, const Sweep& s, const Point& p);

}  // namespace jsweep
