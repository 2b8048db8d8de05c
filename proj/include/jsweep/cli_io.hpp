#pragma once

// Instance files, JSONL traces and SVG rendering.

#include <iosfwd>
#include <string>
#include <vector>

#include "jsweep/verify.hpp"

namespace jsweep {

struct Instance {
  std::vector<Point> vertices;
  Point seed_point;
};

/// {"vertices": [[x, y], ...], "seed_point": [x, y]} where every coordinate is
/// a JSON integer or a string holding an integer, finite decimal or p/q.
/// Throws ParseError (with the offending field) on malformed text.
Instance parse_instance(const std::string& text);

/// parse_instance + validate + seed check; throws ValidationError.
Fixture load_fixture(const std::string& text);

/// Integers are written as JSON numbers, everything else as "p/q" strings.
std::string emit_instance(const Instance& inst);

/// 64-bit FNV-1a of the canonical instance text, as 16 hex digits.
std::string instance_hash(const Instance& inst);

/// One header line followed by one line per extension step.
void emit_trace(const RunResult& res, const Instance& inst, std::ostream& out);
std::string trace_text(const RunResult& res, const Instance& inst);

/// Run settings recovered from a trace header.
Config parse_trace_header(const std::string& first_line);

struct SvgOptions {
  bool hide_walls = false;
  bool hide_extensions = false;
  double width = 800;
};

std::string render_svg(const RunResult& res, const Polygon& poly, const SvgOptions& opts = {});

}  // namespace jsweep
