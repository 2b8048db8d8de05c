#include "jsweep/exact_geom.hpp"

#include <cctype>

#include "jsweep/error.hpp"

namespace jsweep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::AxisParallelEdge: return "AxisParallelEdge";
    case ErrorKind::DuplicateCoordinate: return "DuplicateCoordinate";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::PointOnCurve: return "PointOnCurve";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::InvalidSegment: return "InvalidSegment";
    case ErrorKind::AttachMismatch: return "AttachMismatch";
    case ErrorKind::SeedOnCurve: return "SeedOnCurve";
    case ErrorKind::UnboundedFace: return "UnboundedFace";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::SeedNotInside: return "SeedNotInside";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not an exact decimal or rational: '" + std::string(text) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Scalar value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_number(text);
    value = Scalar(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_number(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    value = Scalar(n, d);
  } else {
    if (!all_digits(body)) bad_number(text);
    value = Scalar(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

std::string format_scalar(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Scalar& value) { return value.get_d(); }

std::string format_point(const Point& p) {
  return "(" + format_scalar(p.x) + ", " + format_scalar(p.y) + ")";
}

int orient(const Point& a, const Point& b, const Point& c) {
  Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

std::optional<Scalar> edge_y_at_x(const Edge& e, const Scalar& x) {
  if (e.a.x == e.b.x) return std::nullopt;
  if (x < e.x_min() || x > e.x_max()) return std::nullopt;
  if (x == e.a.x) return e.a.y;
  if (x == e.b.x) return e.b.y;
  Scalar y = e.a.y + (e.b.y - e.a.y) * (x - e.a.x) / (e.b.x - e.a.x);
  return y;
}

std::optional<Scalar> edge_x_at_y(const Edge& e, const Scalar& y) {
  if (e.a.y == e.b.y) return std::nullopt;
  if (y < e.y_min() || y > e.y_max()) return std::nullopt;
  if (y == e.a.y) return e.a.x;
  if (y == e.b.y) return e.b.x;
  Scalar x = e.a.x + (e.b.x - e.a.x) * (y - e.a.y) / (e.b.y - e.a.y);
  return x;
}

bool on_edge(const Edge& e, const Point& p) {
  if (p.x < e.x_min() || p.x > e.x_max() || p.y < e.y_min() || p.y > e.y_max()) return false;
  return orient(e.a, e.b, p) == 0;
}

Scalar signed_double_area(std::span<const Point> vertices) {
  Scalar sum;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

Scalar shoelace_area(std::span<const Point> vertices) {
  Scalar twice = signed_double_area(vertices);
  return abs(twice) / 2;
}

Point midpoint(const Point& a, const Point& b) {
  return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
}

}  // namespace jsweep
