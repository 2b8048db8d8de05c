#pragma once

// Independent audits of a finished run plus the polygon corpus and the
// convergence / strategy experiments built on top of them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jsweep/greedy_driver.hpp"

namespace jsweep {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // first offending item when !pass
};

struct Report {
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* find(std::string_view name) const;
  std::string summary() const;
};

struct AuditOptions {
  int oracle_samples = 10000;
  std::uint64_t sample_seed = 1;
  int saturation_points = 100;
};

/// Deterministic low-discrepancy points (Halton, bases 2 and 3) over the
/// polygon's bbox, as exact rationals.
std::vector<Point> sample_points(const BBox& box, int count, std::uint64_t seed);

Report check_invariants(const RunResult& res, const Polygon& poly, const AuditOptions& opts = {});

/// Exact face area minus swept area. Throws SeedNotInside.
Scalar deficit(const RunResult& res, const Polygon& poly);

struct ConvergenceRow {
  Scalar eps;
  int sweeps = 0;
  Scalar deficit;
  Scalar max_wall_final;
  HaltReason halt = HaltReason::MaxSteps;
};

std::vector<ConvergenceRow> convergence_study(const Polygon& poly, const Point& seed,
                                              const std::vector<Scalar>& eps_list, int max_steps);

struct SeriesPoint {
  int sweeps = 0;
  Scalar deficit;
  std::optional<Scalar> max_wall;
};

struct StrategySeries {
  Strategy strategy;
  std::vector<SeriesPoint> points;  // one per sweep count, starting after init
};

std::vector<StrategySeries> compare_strategies(const Polygon& poly, const Point& seed,
                                               const std::vector<Strategy>& strategies,
                                               int step_budget);

enum class PolygonKind { Star, Spiral, Comb };

PolygonKind parse_polygon_kind(std::string_view text);
std::string_view to_string(PolygonKind kind);

struct Fixture {
  Polygon polygon;
  Point seed;
};

/// Star: n random-radius points sorted by angle around the origin.
/// Spiral: sheared rectangular spiral corridor, at least two full turns
/// (the segment count is max(8, n/2 - 1), so small n is rounded up).
/// Comb: bar with max(2, n/4) teeth, sheared. Seeds sit at the star centre,
/// the spiral's innermost corridor and the comb's bar.
Fixture gen_polygon(PolygonKind kind, int n, std::uint64_t seed);

/// Largest vertex-to-vertex distance, rounded down to a rational.
Scalar diameter(const Polygon& poly);

}  // namespace jsweep
