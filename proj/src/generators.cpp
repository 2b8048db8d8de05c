#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "jsweep/verify.hpp"

namespace jsweep {

PolygonKind parse_polygon_kind(std::string_view text) {
  if (text == "star") return PolygonKind::Star;
  if (text == "spiral") return PolygonKind::Spiral;
  if (text == "comb") return PolygonKind::Comb;
  throw Error(ErrorKind::ParseError, "unknown polygon kind '" + std::string(text) + "'");
}

std::string_view to_string(PolygonKind kind) {
  switch (kind) {
    case PolygonKind::Star: return "star";
    case PolygonKind::Spiral: return "spiral";
    case PolygonKind::Comb: return "comb";
  }
  return "?";
}

namespace {

// Moves vertices by small exact offsets until x and y coordinates are
// pairwise distinct.
void nudge_general_position(std::vector<Point>& vs) {
  for (int round = 1; round < 64; ++round) {
    bool changed = false;
    std::set<Scalar> xs, ys;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      while (xs.count(vs[i].x)) {
        vs[i].x += Scalar(1, 7 * round + static_cast<long>(i) + 3);
        changed = true;
      }
      xs.insert(vs[i].x);
      while (ys.count(vs[i].y)) {
        vs[i].y += Scalar(1, 11 * round + static_cast<long>(i) + 5);
        changed = true;
      }
      ys.insert(vs[i].y);
    }
    if (!changed) return;
  }
}

// x' = x + y / a, y' = y + x / b: tiny exact shear removing axis-parallel
// edges from rectilinear outlines.
Point shear(const Point& p, long a, long b) {
  return Point{p.x + p.y / Scalar(a), p.y + p.x / Scalar(b)};
}

std::optional<Fixture> star(int n, std::mt19937_64& rng) {
  constexpr double kRadius = 10000.0;
  std::uniform_real_distribution<double> radius(0.3, 1.0);
  std::uniform_real_distribution<double> jitter(0.0, 0.8);
  const double step = 2.0 * std::numbers::pi / n;
  std::vector<Point> vs;
  for (int k = 0; k < n; ++k) {
    double theta = step * (k + jitter(rng));
    double r = kRadius * radius(rng);
    vs.push_back(Point{Scalar(static_cast<long>(std::lround(r * std::cos(theta)))),
                       Scalar(static_cast<long>(std::lround(r * std::sin(theta))))});
  }
  nudge_general_position(vs);
  auto checked = Polygon::validate(std::move(vs));
  if (!checked.polygon) return std::nullopt;
  Point seed{Scalar(0), Scalar(0)};
  if (classify(*checked.polygon, seed) != Location::Inside) return std::nullopt;
  return Fixture{std::move(*checked.polygon), seed};
}

std::optional<Fixture> spiral(int n, std::mt19937_64& rng) {
  const int segments = std::max(8, n / 2 - 1);
  constexpr long kPitch = 20, kHalf = 5;
  std::uniform_int_distribution<long> jitter(0, 3);
  static constexpr long dx[4] = {1, 0, -1, 0};
  static constexpr long dy[4] = {0, 1, 0, -1};

  std::vector<std::pair<long, long>> centre{{0, 0}};
  for (int k = 0; k < segments; ++k) {
    long len = kPitch * (k / 2 + 1) + (k >= 2 ? jitter(rng) : 0);
    auto [x, y] = centre.back();
    centre.emplace_back(x + dx[k % 4] * len, y + dy[k % 4] * len);
  }
  // Offset the centreline by kHalf to both sides; left normal of direction d
  // is direction d + 1.
  auto offset = [&](int k, long sign) {
    // k indexes centreline points; corners take both adjacent normals.
    long ox = 0, oy = 0;
    if (k > 0) ox += dx[(k - 1 + 1) % 4], oy += dy[(k - 1 + 1) % 4];
    if (k < segments) ox += dx[(k + 1) % 4], oy += dy[(k + 1) % 4];
    auto [x, y] = centre[static_cast<std::size_t>(k)];
    return Point{Scalar(x + sign * kHalf * ox), Scalar(y + sign * kHalf * oy)};
  };
  std::vector<Point> raw;
  for (int k = 0; k <= segments; ++k) raw.push_back(offset(k, 1));
  for (int k = segments; k >= 0; --k) raw.push_back(offset(k, -1));

  const long a = 1013 + static_cast<long>(rng() % 64), b = 1019 + static_cast<long>(rng() % 64);
  std::vector<Point> vs;
  for (const auto& p : raw) vs.push_back(shear(p, a, b));
  nudge_general_position(vs);
  auto checked = Polygon::validate(std::move(vs));
  if (!checked.polygon) return std::nullopt;
  Point seed = shear(Point{Scalar(kPitch / 2), Scalar(0)}, a, b);
  if (classify(*checked.polygon, seed) != Location::Inside) return std::nullopt;
  return Fixture{std::move(*checked.polygon), seed};
}

std::optional<Fixture> comb(int n, std::mt19937_64& rng) {
  const int teeth = std::max(2, n / 4);
  constexpr long kTooth = 10, kGap = 10, kBar = 12;
  std::uniform_int_distribution<long> height(40, 80);
  const long width = teeth * kTooth + (teeth - 1) * kGap;

  std::vector<Point> raw{{Scalar(0), Scalar(0)}, {Scalar(width), Scalar(0)}};
  for (int i = teeth - 1; i >= 0; --i) {
    long left = i * (kTooth + kGap);
    long top = kBar + height(rng);
    raw.push_back({Scalar(left + kTooth), Scalar(top)});
    raw.push_back({Scalar(left), Scalar(top)});
    if (i > 0) {
      raw.push_back({Scalar(left), Scalar(kBar)});
      raw.push_back({Scalar(left - kGap), Scalar(kBar)});
    }
  }

  const long a = 1009 + static_cast<long>(rng() % 64), b = 1021 + static_cast<long>(rng() % 64);
  std::vector<Point> vs;
  for (const auto& p : raw) vs.push_back(shear(p, a, b));
  nudge_general_position(vs);
  auto checked = Polygon::validate(std::move(vs));
  if (!checked.polygon) return std::nullopt;
  Point seed = shear(Point{Scalar(width, 2) + Scalar(1, 3), Scalar(kBar, 2) + Scalar(1, 7)}, a, b);
  if (classify(*checked.polygon, seed) != Location::Inside) return std::nullopt;
  return Fixture{std::move(*checked.polygon), seed};
}

}  // namespace

Fixture gen_polygon(PolygonKind kind, int n, std::uint64_t seed) {
  const int minimum = kind == PolygonKind::Star ? 3 : 8;
  if (n < minimum) {
    throw Error(ErrorKind::GenerationFailed, std::string(to_string(kind)) + " needs n >= " + std::to_string(minimum));
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::optional<Fixture> f;
    switch (kind) {
      case PolygonKind::Star: f = star(n, rng); break;
      case PolygonKind::Spiral: f = spiral(n, rng); break;
      case PolygonKind::Comb: f = comb(n, rng); break;
    }
    if (f) return std::move(*f);
  }
  throw Error(ErrorKind::GenerationFailed, std::string(to_string(kind)) + " n=" + std::to_string(n));
}

Scalar diameter(const Polygon& poly) {
  Scalar best;
  const auto& vs = poly.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Scalar dx = vs[i].x - vs[j].x, dy = vs[i].y - vs[j].y;
      Scalar d2 = dx * dx + dy * dy;
      if (d2 > best) best = d2;
    }
  }
  // Rational lower bound on sqrt(best), accurate to about 1e-9 relative.
  double root = std::sqrt(best.get_d());
  Scalar approx(static_cast<long>(std::floor(root * 1e6)), 1000000L);
  while (approx * approx > best) approx -= Scalar(1, 1000000);
  return approx;
}

}  // namespace jsweep
