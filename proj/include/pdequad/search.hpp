#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdequad/decomposer.hpp"
#include "pdequad/pde_system.hpp"

namespace pdequad {

struct SearchProgress {
  std::size_t nodes;
  std::size_t depth;
  /// Order of the incumbent, if any.
  std::optional<int> incumbent_order;
  /// Monomial auxes of the node about to be verified.
  std::span<const Monomial> candidate;
};

struct SearchConfig {
  HeuristicKind heuristic;
  /// PR1 bound: largest admissible order, counting inverse auxes.
  int max_aux = 8;
  /// Differential order k; defaults to 3h.
  std::optional<int> diff_order;
  /// PR2 bound on the derivative content of new auxes; defaults to k - h.
  std::optional<int> max_aux_deriv;
  std::optional<std::size_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  bool shrink = true;
  /// auto_search stops once k exceeds 3h + overshoot.
  int overshoot = 2;
  std::function<void(const SearchProgress&)> progress;
};

enum class SearchStatus {
  Found,
  Pr1Exhausted,
  Pr2Exhausted,
  Exhausted,
  NodeLimit,
  TimeLimit,
};

std::string to_string(SearchStatus s);

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t shrink_checks = 0;
  std::size_t pr1_prunes = 0;
  std::size_t pr2_prunes = 0;
  std::size_t dead_leaves = 0;
  double wall_ms = 0;
  std::optional<int> best_order;
  /// Number of search runs (more than one only under auto_search).
  int attempts = 0;
};

struct QuadResult {
  SearchStatus status = SearchStatus::Exhausted;
  /// Whether a node or time limit cut the search short.
  bool limit_hit = false;
  /// The root extended by the best monomial auxes; set when found.
  std::optional<ExtendedSystem> system;
  std::vector<Monomial> aux;
  std::vector<Polynomial> forms;
  int diff_order = 0;
  int max_aux = 0;
  SearchStats stats;

  bool found() const { return status == SearchStatus::Found; }
  /// Inverse auxes plus monomial auxes.
  int order() const;
};

/// Resolved k and PR2 bound for `cfg` on `sys`.
int effective_diff_order(const ExtendedSystem& sys, const SearchConfig& cfg);
int effective_max_aux_deriv(const ExtendedSystem& sys, const SearchConfig& cfg);

/// Depth-first branch and bound from the root `sys`.
QuadResult search(const ExtendedSystem& sys, const SearchConfig& cfg);
QuadResult search(const PdeSystem& sys, const SearchConfig& cfg);

/// Smallest proper subset of `W` (ascending size, then lexicographic index
/// order) whose extension of `root` verifies at order k, or W itself.
/// Subsets larger than `max_size` are skipped (default |W| - 1); `checks`
/// counts verify calls.
std::vector<Monomial> shrink(const ExtendedSystem& root, const std::vector<Monomial>& W, int k,
                             std::size_t* checks = nullptr,
                             std::optional<std::size_t> max_size = std::nullopt);

/// Reruns search with k += 1 and N = max(1, 2N) after each failure.
QuadResult auto_search(const ExtendedSystem& sys, const SearchConfig& cfg);

}  // namespace pdequad
