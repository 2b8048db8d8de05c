#include "jsweep/cli_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace jsweep {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::ParseError, field + ": " + why);
}

Scalar scalar_from_json(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Scalar(mpz_class(std::to_string(v.get<std::uint64_t>())))
                                  : Scalar(mpz_class(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      parse_fail(field, e.what());
    }
  }
  if (v.is_number_float()) parse_fail(field, "binary floating point is not exact; quote it as a decimal string");
  parse_fail(field, "expected an integer or a decimal string");
}

Point point_from_json(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) parse_fail(field, "expected [x, y]");
  return {scalar_from_json(v[0], field + "[0]"), scalar_from_json(v[1], field + "[1]")};
}

json scalar_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return json(s.get_num().get_si());
  return json(format_scalar(s));
}

json exact(const Scalar& s) { return json(format_scalar(s)); }

json point_json(const Point& p) { return json::array({exact(p.x), exact(p.y)}); }

json on_j_json(const PointOnJ& q) { return json{{"edge", q.edge}, {"t", exact(q.t)}}; }

json wall_json(const Wall& w) {
  return json{{"id", w.id},
              {"x", exact(w.seg.x)},
              {"y_lo", exact(w.seg.y_lo)},
              {"y_hi", exact(w.seg.y_hi)},
              {"length", exact(w.length())},
              {"origin_step", w.origin_step},
              {"swept_side", w.swept_side == Side::Left ? "left" : "right"}};
}

json end_json(const SegmentEnd& e) {
  if (e.kind == SegmentEnd::Kind::OnJ) {
    json j{{"kind", "OnJ"}};
    j.update(on_j_json(*e.on_j));
    return j;
  }
  return json{{"kind", "AtWall"}, {"wall", e.wall->id}};
}

json segment_json(const HSegment& t) {
  return json{{"y", exact(t.y)},
              {"x_lo", exact(t.x_lo)},
              {"x_hi", exact(t.x_hi)},
              {"lo_end", end_json(t.lo_end)},
              {"hi_end", end_json(t.hi_end)}};
}

json walls_json(const std::vector<Wall>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(wall_json(w));
  return arr;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail("instance", "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) parse_fail("instance", "expected an object");
  if (!doc.contains("vertices")) parse_fail("vertices", "missing");
  if (!doc.contains("seed_point")) parse_fail("seed_point", "missing");
  const json& vs = doc["vertices"];
  if (!vs.is_array()) parse_fail("vertices", "expected an array");
  Instance inst;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    inst.vertices.push_back(point_from_json(vs[i], "vertices[" + std::to_string(i) + "]"));
  }
  inst.seed_point = point_from_json(doc["seed_point"], "seed_point");
  return inst;
}

Fixture load_fixture(const std::string& text) {
  Instance inst = parse_instance(text);
  Polygon poly = Polygon::from_vertices(std::move(inst.vertices));
  if (classify(poly, inst.seed_point) == Location::On) {
    throw Error(ErrorKind::ValidationError, "seed point " + format_point(inst.seed_point) + " lies on the curve");
  }
  return Fixture{std::move(poly), inst.seed_point};
}

std::string emit_instance(const Instance& inst) {
  json vs = json::array();
  for (const auto& p : inst.vertices) vs.push_back(json::array({scalar_json(p.x), scalar_json(p.y)}));
  json doc{{"vertices", vs},
           {"seed_point", json::array({scalar_json(inst.seed_point.x), scalar_json(inst.seed_point.y)})}};
  return doc.dump() + "\n";
}

std::string instance_hash(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

void emit_trace(const RunResult& res, const Instance& inst, std::ostream& out) {
  const Sweep& first = res.region.sweeps().front();
  json header{{"type", "header"},
              {"strategy", res.config.strategy.name()},
              {"random_seed", res.config.strategy.seed},
              {"eps", exact(res.config.eps)},
              {"max_steps", res.config.max_steps},
              {"instance_hash", instance_hash(inst)},
              {"seed_point", point_json(inst.seed_point)},
              {"init", json{{"step", 1},
                            {"t", segment_json(res.initial_t)},
                            {"walls", walls_json(res.initial_walls)},
                            {"area", exact(first.area)}}},
              {"sweep_count", res.sweep_count},
              {"halt_reason", std::string(to_string(res.halt_reason))}};
  out << header.dump() << "\n";
  for (const auto& rec : res.trace) {
    json term{{"kind", rec.terminus.kind == Terminus::Kind::OnJ ? "OnJ" : "OnWall"},
              {"point", point_json(rec.terminus.hit)}};
    if (rec.terminus.kind == Terminus::Kind::OnJ) {
      term.update(on_j_json(*rec.terminus.on_j));
    } else {
      term["wall"] = rec.terminus.wall_id;
    }
    json line{{"step", rec.step},
              {"wall_used", wall_json(rec.wall_used)},
              {"midpoint", point_json(rec.midpoint)},
              {"t", segment_json(rec.t)},
              {"terminus", term},
              {"walls_added", walls_json(rec.walls_added)},
              {"walls_removed", walls_json(rec.walls_removed)},
              {"cycle_event", std::string(to_string(rec.cycle_event))},
              {"area_after", exact(rec.area_after)},
              {"max_wall_after", rec.max_wall_after ? exact(*rec.max_wall_after) : json(nullptr)}};
    out << line.dump() << "\n";
  }
}

std::string trace_text(const RunResult& res, const Instance& inst) {
  std::ostringstream out;
  emit_trace(res, inst, out);
  return out.str();
}

Config parse_trace_header(const std::string& first_line) {
  json h;
  try {
    h = json::parse(first_line);
  } catch (const json::parse_error& e) {
    parse_fail("trace header", "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!h.is_object() || h.value("type", "") != "header") parse_fail("trace header", "not a header line");
  Config cfg;
  try {
    cfg.strategy = Strategy::parse(h.at("strategy").get<std::string>());
    cfg.eps = parse_scalar(h.at("eps").get<std::string>());
    cfg.max_steps = h.at("max_steps").get<int>();
  } catch (const json::exception& e) {
    parse_fail("trace header", e.what());
  }
  return cfg;
}

std::string render_svg(const RunResult& res, const Polygon& poly, const SvgOptions& opts) {
  const BBox& box = poly.bbox();
  const double x0 = to_double(box.x_min), y1 = to_double(box.y_max);
  const double span_x = to_double(box.x_max) - x0, span_y = y1 - to_double(box.y_min);
  const double margin = 10;
  const double scale = (opts.width - 2 * margin) / std::max(span_x, span_y);
  const double height = span_y * scale + 2 * margin;
  auto sx = [&](const Scalar& x) { return fmt(margin + (to_double(x) - x0) * scale); };
  auto sy = [&](const Scalar& y) { return fmt(margin + (y1 - to_double(y)) * scale); };
  auto pt = [&](const Scalar& x, const Scalar& y) { return sx(x) + "," + sy(y); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opts.width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(opts.width) << " " << fmt(height) << "\">\n";

  out << "<g id=\"sweeps\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" stroke-width=\"0.3\">\n";
  for (const auto& s : res.region.sweeps()) {
    out << "<g class=\"sweep\" data-step=\"" << s.step_id << "\">";
    std::vector<Scalar> cuts;
    for (const auto& sp : s.upper.spans) cuts.push_back(sp.x_lo);
    for (const auto& sp : s.lower.spans) cuts.push_back(sp.x_lo);
    cuts.push_back(s.t.x_hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Scalar& a = cuts[k];
      const Scalar& b = cuts[k + 1];
      Scalar mid = (a + b) / 2;
      auto edge_of = [&](const Envelope& env) {
        for (const auto& sp : env.spans) {
          if (sp.x_lo < mid && mid < sp.x_hi) return poly.edge(sp.edge);
        }
        return poly.edge(env.spans.front().edge);
      };
      Edge up = edge_of(s.upper), lo = edge_of(s.lower);
      out << "<polygon points=\"" << pt(a, *edge_y_at_x(lo, a)) << " " << pt(b, *edge_y_at_x(lo, b)) << " "
          << pt(b, *edge_y_at_x(up, b)) << " " << pt(a, *edge_y_at_x(up, a)) << "\"/>";
    }
    out << "</g>\n";
  }
  out << "</g>\n";

  out << "<g id=\"curve\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"><polygon points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out << (i ? " " : "") << pt(poly.vertex(i).x, poly.vertex(i).y);
  }
  out << "\"/></g>\n";

  if (!opts.hide_extensions) {
    out << "<g id=\"extensions\" stroke=\"#31a354\" stroke-width=\"0.6\" fill=\"#31a354\">\n";
    const HSegment& t1 = res.initial_t;
    out << "<line data-step=\"1\" x1=\"" << sx(t1.x_lo) << "\" y1=\"" << sy(t1.y) << "\" x2=\"" << sx(t1.x_hi)
        << "\" y2=\"" << sy(t1.y) << "\"/>\n";
    for (const auto& rec : res.trace) {
      out << "<line data-step=\"" << rec.step << "\" x1=\"" << sx(rec.t.x_lo) << "\" y1=\"" << sy(rec.t.y)
          << "\" x2=\"" << sx(rec.t.x_hi) << "\" y2=\"" << sy(rec.t.y) << "\"/>";
      out << "<circle cx=\"" << sx(rec.midpoint.x) << "\" cy=\"" << sy(rec.midpoint.y) << "\" r=\"1.5\"/>\n";
    }
    out << "</g>\n";
  }

  if (!opts.hide_walls) {
    out << "<g id=\"walls\" stroke=\"#e6550d\" stroke-width=\"1.5\">\n";
    for (const auto& [id, w] : res.region.walls()) {
      out << "<line data-wall=\"" << id << "\" x1=\"" << sx(w.seg.x) << "\" y1=\"" << sy(w.seg.y_lo)
          << "\" x2=\"" << sx(w.seg.x) << "\" y2=\"" << sy(w.seg.y_hi) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace jsweep
