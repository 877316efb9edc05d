#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdequad/search.hpp"

namespace pdequad {

struct BenchmarkCase {
  std::string name;
  std::string title;
  /// DSL source, parameters instantiated.
  std::string source;
  int expected_order;
  /// Published auxiliary set as DSL expressions over the states.
  std::vector<std::string> expected_aux;
  bool heavy;
  int reference_nodes;
};

/// The fourteen models, in the published table's order.
const std::vector<BenchmarkCase>& benchmark_cases();
const BenchmarkCase* find_benchmark(std::string_view name);

/// Parsed and polynomialized system for a case.
ExtendedSystem benchmark_system(const BenchmarkCase& c);

/// Converts published aux expressions (monomials possibly divided by
/// inverse factors of `root`) into monomials over Base and inverse symbols.
/// Entries equal to a bare inverse symbol are returned as that symbol.
std::vector<Monomial> aux_monomials(const ExtendedSystem& root,
                                    const std::vector<std::string>& exprs);

struct SuiteRow {
  std::string name;
  int found_order = -1;
  int expected_order = 0;
  std::size_t nodes = 0;
  double wall_ms = 0;
  bool sound = false;
  bool pass = false;
  QuadResult result;
};

/// Runs search on every case whose name contains `filter` (all when empty);
/// heavy cases only with `include_heavy`. A row passes when the found order
/// is at most the published one and the quadratic forms re-verify.
std::vector<SuiteRow> run_suite(const std::string& filter, const SearchConfig& cfg,
                                bool include_heavy = false);

struct Table1Check {
  std::string name;
  int k = 0;
  int order = 0;
  bool verified = false;
  std::string detail;
};

/// Module-2 check of every published aux set at k = 3h; no search.
std::vector<Table1Check> verify_table1_sets();

/// Plain-text table of suite rows.
std::string format_suite(const std::vector<SuiteRow>& rows);

}  // namespace pdequad
