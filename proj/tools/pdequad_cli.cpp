#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pdequad/benchmarks.hpp"
#include "pdequad/parser.hpp"
#include "pdequad/report.hpp"

using namespace pdequad;

namespace {

int fail(const std::string& msg) {
  std::cerr << "pdequad: " << msg << "\n";
  return 1;
}

bool blank(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p != std::string::npos && line[p] != '#') return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratization of polynomial and rational PDE systems"};
  app.set_version_flag("--version", "pdequad 1.0.0");

  std::string input_path;
  std::string heuristic = "h3";
  int max_aux = 8;
  std::optional<int> diff_order;
  std::optional<int> max_aux_deriv;
  bool no_shrink = false;
  bool auto_mode = false;
  std::optional<std::size_t> node_limit;
  std::optional<double> time_limit;
  std::string json_path;
  bool stats = false;
  std::string benchmark;
  bool list = false;

  app.add_option("input", input_path, "PDE source file (default: standard input)");
  app.add_option("--heuristic", heuristic, "Candidate ordering: h1, h2 or h3")
      ->check(CLI::IsMember({"h1", "h2", "h3"}, CLI::ignore_case));
  app.add_option("--max-aux", max_aux, "Largest admissible order N")->check(CLI::NonNegativeNumber);
  app.add_option("--diff-order", diff_order, "Differential order k (default 3h)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-aux-deriv", max_aux_deriv,
                 "Largest derivative order inside a new aux (default k - h)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--no-shrink", no_shrink, "Do not search subsets of found quadratizations");
  app.add_flag("--auto", auto_mode, "Retry with k + 1 and 2N until found");
  app.add_option("--node-limit", node_limit, "Stop after this many nodes");
  app.add_option("--time-limit", time_limit, "Stop after this many seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "Write the JSON report to PATH ('-' for stdout)");
  app.add_flag("--stats", stats, "Print search statistics to stderr");
  app.add_option("--benchmark", benchmark, "Run a built-in model")->excludes("input");
  app.add_flag("--list-benchmarks", list, "List built-in models and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (list) {
    for (const auto& c : benchmark_cases()) {
      std::printf("%-14s %s%s\n", c.name.c_str(), c.title.c_str(), c.heavy ? " (heavy)" : "");
    }
    return 0;
  }

  RunInput input;
  if (!benchmark.empty()) {
    const BenchmarkCase* c = find_benchmark(benchmark);
    if (!c) return fail("unknown benchmark '" + benchmark + "' (see --list-benchmarks)");
    input.source = c->source;
    input.benchmark = c->name;
  } else if (!input_path.empty()) {
    std::ifstream f(input_path);
    if (!f) return fail("cannot read '" + input_path + "'");
    input.source.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    input.source.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  if (blank(input.source)) {
    std::cerr << app.help();
    return fail("empty input");
  }

  RunOptions opts;
  opts.auto_mode = auto_mode;
  SearchConfig& cfg = opts.search;
  cfg.heuristic.kind = *parse_heuristic(heuristic);
  cfg.max_aux = max_aux;
  cfg.diff_order = diff_order;
  cfg.max_aux_deriv = max_aux_deriv;
  cfg.shrink = !no_shrink;
  cfg.node_limit = node_limit;
  if (time_limit) {
    cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(*time_limit * 1000));
  }

  ExtendedSystem root;
  try {
    root = polynomialize(parse_source(input.source).system);
  } catch (const ParseError& e) {
    return fail(e.what());
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  QuadResult r;
  try {
    r = auto_mode ? auto_search(root, cfg) : search(root, cfg);
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  if (stats) {
    std::fprintf(stderr,
                 "nodes %zu  shrink_checks %zu  pr1_prunes %zu  pr2_prunes %zu  attempts %d  "
                 "k %d  wall_ms %.1f\n",
                 r.stats.nodes, r.stats.shrink_checks, r.stats.pr1_prunes, r.stats.pr2_prunes,
                 r.stats.attempts, r.diff_order, r.stats.wall_ms);
  }

  if (json_path.empty()) {
    std::cout << format_report(r);
  } else {
    std::string doc = make_report(input, opts, root, r).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(json_path);
      if (!out || !(out << doc)) return fail("cannot write '" + json_path + "'");
    }
  }
  return r.found() ? 0 : 2;
}
