#pragma once

// A horizontal sweep H(t): the union of the maximal open vertical chords
// through the interior of a horizontal segment t, stored as a pair of
// piecewise-linear envelopes over t's x-span plus its boundary walls.

#include <cstddef>
#include <optional>
#include <vector>

#include "jsweep/jordan_curve.hpp"

namespace jsweep {

/// Horizontal side of a vertical wall.
enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// A region wall a segment end is attached to.
struct AttachedWall {
  int id = -1;
  VSegment seg;
};

struct SegmentEnd {
  enum class Kind { OnJ, AtWall };

  Kind kind = Kind::OnJ;
  std::optional<PointOnJ> on_j;
  std::optional<AttachedWall> wall;

  static SegmentEnd on_curve(PointOnJ q) { return {Kind::OnJ, std::move(q), std::nullopt}; }
  static SegmentEnd at_wall(AttachedWall w) { return {Kind::AtWall, std::nullopt, std::move(w)}; }
};

/// The open horizontal segment {(x, y) : x_lo < x < x_hi}.
struct HSegment {
  Scalar y, x_lo, x_hi;
  SegmentEnd lo_end, hi_end;
};

enum class EnvelopeSide { Upper, Lower };

struct Span {
  Scalar x_lo, x_hi;
  std::size_t edge;
};

struct Envelope {
  EnvelopeSide side = EnvelopeSide::Upper;
  std::vector<Span> spans;  // partition of (x_lo, x_hi), coalesced

  /// Chord end at x for x strictly inside the envelope's range. At a
  /// breakpoint the nearer of the two one-sided limits is returned, which is
  /// where the chord through that abscissa actually stops.
  Scalar value_at(const Polygon& poly, const Scalar& x) const;
};

struct SweepWall {
  enum class Kind { Jump, End };

  VSegment seg;
  Side swept_side = Side::Left;  // the side this sweep occupies
  Kind kind = Kind::Jump;
  std::optional<int> attached_id;  // set when the piece is an existing region wall
};

/// Sub-path of J traversed with the swept region on the right. `from == to`
/// is either a single point or, with `full`, the whole curve.
struct BoundaryPiece {
  enum class Kind { Arc, Wall };

  Kind kind = Kind::Arc;
  PointOnJ from;
  PointOnJ to;
  bool full = false;  // arcs only
  int wall = -1;      // walls only: sweep-local index or region wall id
  bool upward = false;

  bool degenerate_arc() const { return kind == Kind::Arc && !full && from == to; }
};

using Cycle = std::vector<BoundaryPiece>;

struct Sweep {
  HSegment t;
  Envelope upper;
  Envelope lower;
  std::vector<SweepWall> walls;
  std::vector<BoundaryPiece> arcs;
  Scalar area;
  int step_id = 0;
};

/// Throws InvalidSegment when t is not a J-free segment with consistent ends,
/// AttachMismatch when an AtWall end does not fit the chord there, and
/// Unbounded when some chord over t escapes J.
Sweep build_sweep(const Polygon& poly, const HSegment& t, int step_id = 1);

/// Closed boundary of a single sweep, clockwise (region on the right):
/// upper envelope left to right, hi-end walls, lower envelope right to left,
/// lo-end walls. Wall pieces index into `s.walls`.
Cycle sweep_boundary(const Polygon& poly, const Sweep& s);

/// Merges adjacent arcs (cyclically) and separates adjacent walls with
/// single-point arcs.
void normalize_cycle(const Polygon& poly, Cycle& cycle);

/// Concatenation of two arcs that share an endpoint.
BoundaryPiece join_arcs(const Polygon& poly, const BoundaryPiece& a, const BoundaryPiece& b);

}  // namespace jsweep
