#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdequad/search.hpp"

namespace pdequad {

/// Definition of aux `id` as a DSL expression over the states, e.g. "u*y/v^2".
std::string aux_definition_string(const ExtendedSystem& sys, int id);

struct RunInput {
  std::string source;
  std::optional<std::string> benchmark;
};

struct RunOptions {
  SearchConfig search;
  bool auto_mode = false;
};

/// JSON report with keys input, config, result and stats. Everything except
/// stats.wall_ms is a deterministic function of the arguments.
nlohmann::json make_report(const RunInput& input, const RunOptions& opts,
                           const ExtendedSystem& root, const QuadResult& r);

/// Human-readable form of the same report.
std::string format_report(const QuadResult& r);

}  // namespace pdequad
