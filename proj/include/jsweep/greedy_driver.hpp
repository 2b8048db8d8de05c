#pragma once

// The greedy sweepline loop: start from the maximal horizontal segment
// through the seed, then repeatedly extend from the midpoint of the longest
// wall until no wall is left, every wall is shorter than eps, or the step
// budget runs out.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "jsweep/swept_region.hpp"

namespace jsweep {

enum class StrategyKind { Greedy, Fifo, Lifo, Random };

struct Strategy {
  StrategyKind kind = StrategyKind::Greedy;
  std::uint64_t seed = 0;  // Random only

  static Strategy parse(std::string_view text);  // "greedy", "fifo", "lifo", "random:<seed>"
  std::string name() const;
};

struct Config {
  Scalar eps;  // 0 disables the eps halt
  int max_steps = 10000;
  Strategy strategy;
};

enum class HaltReason { EmptyWallSet, EpsilonReached, MaxSteps };

std::string_view to_string(HaltReason r);
std::string_view to_string(CycleEvent e);

struct Terminus {
  enum class Kind { OnJ, OnWall };

  Kind kind = Kind::OnJ;
  std::optional<PointOnJ> on_j;
  int wall_id = -1;
  Point hit;
};

struct StepRecord {
  int step = 0;
  Wall wall_used;
  Point midpoint;
  HSegment t;
  Terminus terminus;
  std::vector<Wall> walls_added;
  std::vector<Wall> walls_removed;
  CycleEvent cycle_event = CycleEvent::None;
  Scalar area_after;
  std::optional<Scalar> max_wall_after;
};

struct TreeNode {
  int step = 0;
  std::optional<int> parent;
  std::vector<int> children;
};

struct RecursionTree {
  std::vector<TreeNode> nodes;  // nodes[k] is step k + 1

  const TreeNode& node(int step) const { return nodes.at(static_cast<std::size_t>(step - 1)); }
};

/// The region refers to the polygon it was built on; keep that alive.
struct RunResult {
  Region region;
  RecursionTree tree;
  Config config;
  HSegment initial_t;
  std::vector<Wall> initial_walls;
  std::vector<StepRecord> trace;
  HaltReason halt_reason = HaltReason::MaxSteps;
  int sweep_count = 0;
};

/// Maximal horizontal segment through the seed with both ends on J.
/// Throws SeedOnCurve or UnboundedFace.
HSegment initial_segment(const Polygon& poly, const Point& seed);

/// Maximal extension from the midpoint of `w` into the unswept side.
std::pair<HSegment, Terminus> extend_from_wall(const Polygon& poly, const Region& region, const Wall& w);

/// One-run state machine; `run` drives it to a halt.
class GreedyDriver {
 public:
  GreedyDriver(const Polygon& poly, const Point& seed, Config cfg);

  /// Halt reason if the loop is done, otherwise performs one extension.
  std::variant<HaltReason, StepRecord> step();

  const Region& region() const { return *region_; }
  int sweep_count() const { return static_cast<int>(region_->sweeps().size()); }

  RunResult finish(HaltReason reason) &&;

 private:
  std::optional<HaltReason> halt_check() const;
  Wall select() ;

  const Polygon* poly_;
  Config cfg_;
  HSegment initial_t_;
  std::optional<Region> region_;
  std::vector<Wall> initial_walls_;
  RecursionTree tree_;
  std::vector<StepRecord> trace_;
  std::mt19937_64 rng_;
};

RunResult run(const Polygon& poly, const Point& seed, const Config& cfg);

}  // namespace jsweep
