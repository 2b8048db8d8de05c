// jsweep command line: run, verify, study, compare, gen, render.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jsweep/cli_io.hpp"

using namespace jsweep;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

struct Loaded {
  Instance inst;
  Fixture fix;
};

Loaded load(const std::string& path) {
  std::string text = slurp(path);
  Instance inst = parse_instance(text);
  Fixture fix = load_fixture(text);
  return {std::move(inst), std::move(fix)};
}

// Empty means diameter/1000.
Scalar eps_or_default(const std::string& text, const Polygon& poly) {
  return text.empty() ? diameter(poly) / 1000 : parse_scalar(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string dec(const Scalar& s) {
  std::ostringstream os;
  os.precision(12);
  os << to_double(s);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy horizontal sweeps of a polygonal Jordan curve face"};
  app.require_subcommand(1);

  std::string input, eps_text, strategy_text = "greedy", trace_out, svg_out, out_path = "-";
  std::string eps_list = "1/2,1/4,1/8,1/16,1/32", strategies = "greedy,fifo,lifo,random:1";
  std::string kind_text = "star";
  int max_steps = 10000, samples = 10000, budget = 200, n = 16;
  std::uint64_t sample_seed = 1, gen_seed = 1;

  auto* run_cmd = app.add_subcommand("run", "Run the sweep loop on an instance");
  run_cmd->add_option("--input", input, "Instance JSON")->required();
  run_cmd->add_option("--eps", eps_text, "Halt once every wall is shorter (default diameter/1000)");
  run_cmd->add_option("--max-steps", max_steps, "Sweep budget including the initial sweep");
  run_cmd->add_option("--strategy", strategy_text, "greedy | fifo | lifo | random:<seed>");
  run_cmd->add_option("--trace", trace_out, "JSONL trace output ('-' for stdout)");
  run_cmd->add_option("--svg", svg_out, "SVG output");

  auto* verify_cmd = app.add_subcommand("verify", "Run greedy and audit every invariant");
  verify_cmd->add_option("--input", input, "Instance JSON")->required();
  verify_cmd->add_option("--eps", eps_text, "Halt threshold (default diameter/1000)");
  verify_cmd->add_option("--samples", samples, "Oracle sample points");
  verify_cmd->add_option("--sample-seed", sample_seed, "Sample sequence seed");

  auto* study_cmd = app.add_subcommand("study", "Deficit versus eps, as CSV");
  study_cmd->add_option("--input", input, "Instance JSON")->required();
  study_cmd->add_option("--eps-list", eps_list, "Comma separated eps values");

  auto* compare_cmd = app.add_subcommand("compare", "Strategy comparison at a fixed budget, as CSV");
  compare_cmd->add_option("--input", input, "Instance JSON")->required();
  compare_cmd->add_option("--strategies", strategies, "Comma separated strategies");
  compare_cmd->add_option("--budget", budget, "Sweep budget");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a fixture polygon");
  gen_cmd->add_option("--kind", kind_text, "star | spiral | comb");
  gen_cmd->add_option("--n", n, "Vertex count hint");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("--out", out_path, "Instance output ('-' for stdout)");

  auto* render_cmd = app.add_subcommand("render", "Re-run a trace and draw it");
  render_cmd->add_option("--input", input, "Instance JSON")->required();
  render_cmd->add_option("--trace", trace_out, "Trace written by run")->required();
  render_cmd->add_option("--out", out_path, "SVG output ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*run_cmd) {
      Loaded in = load(input);
      Config cfg{eps_or_default(eps_text, in.fix.polygon), max_steps, Strategy::parse(strategy_text)};
      RunResult res = run(in.fix.polygon, in.fix.seed, cfg);
      if (!trace_out.empty()) write_file(trace_out, trace_text(res, in.inst));
      if (!svg_out.empty()) write_file(svg_out, render_svg(res, in.fix.polygon, {}));
      std::cerr << "sweeps=" << res.sweep_count << " halt=" << to_string(res.halt_reason)
                << " area=" << format_scalar(res.region.area()) << "\n";
      return kOk;
    }
    if (*verify_cmd) {
      Loaded in = load(input);
      Config cfg{eps_or_default(eps_text, in.fix.polygon), max_steps, Strategy{}};
      RunResult res = run(in.fix.polygon, in.fix.seed, cfg);
      AuditOptions opts;
      opts.oracle_samples = samples;
      opts.sample_seed = sample_seed;
      Report rep = check_invariants(res, in.fix.polygon, opts);
      std::cout << rep.summary();
      return rep.pass() ? kOk : kCheckFailed;
    }
    if (*study_cmd) {
      Loaded in = load(input);
      std::vector<Scalar> eps;
      for (const auto& e : split(eps_list, ',')) eps.push_back(parse_scalar(e));
      auto rows = convergence_study(in.fix.polygon, in.fix.seed, eps, max_steps);
      std::cout << "eps,sweeps,deficit,deficit_approx,max_wall_final,halt\n";
      for (const auto& r : rows) {
        std::cout << format_scalar(r.eps) << "," << r.sweeps << "," << format_scalar(r.deficit) << ","
                  << dec(r.deficit) << "," << format_scalar(r.max_wall_final) << "," << to_string(r.halt)
                  << "\n";
      }
      return kOk;
    }
    if (*compare_cmd) {
      Loaded in = load(input);
      std::vector<Strategy> list;
      for (const auto& s : split(strategies, ',')) list.push_back(Strategy::parse(s));
      auto series = compare_strategies(in.fix.polygon, in.fix.seed, list, budget);
      std::cout << "strategy,sweeps,deficit_approx,max_wall\n";
      for (const auto& s : series) {
        for (const auto& p : s.points) {
          std::cout << s.strategy.name() << "," << p.sweeps << "," << dec(p.deficit) << ","
                    << (p.max_wall ? format_scalar(*p.max_wall) : std::string()) << "\n";
        }
      }
      return kOk;
    }
    if (*gen_cmd) {
      Fixture fix = gen_polygon(parse_polygon_kind(kind_text), n, gen_seed);
      write_file(out_path, emit_instance(Instance{fix.polygon.vertices(), fix.seed}));
      return kOk;
    }
    if (*render_cmd) {
      Loaded in = load(input);
      std::string trace = slurp(trace_out);
      Config cfg = parse_trace_header(trace.substr(0, trace.find('\n')));
      RunResult res = run(in.fix.polygon, in.fix.seed, cfg);
      if (trace_text(res, in.inst) != trace) {
        std::cerr << "error: trace does not match a rerun on this instance\n";
        return kCheckFailed;
      }
      write_file(out_path, render_svg(res, in.fix.polygon, {}));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
