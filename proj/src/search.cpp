#include "pdequad/search.hpp"

#include <algorithm>

#include "pdequad/verifier.hpp"

namespace pdequad {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Pr1Exhausted:
      return "pr1_exhausted";
    case SearchStatus::Pr2Exhausted:
      return "pr2_exhausted";
    case SearchStatus::Exhausted:
      return "exhausted";
    case SearchStatus::NodeLimit:
      return "node_limit";
    case SearchStatus::TimeLimit:
      return "time_limit";
  }
  return "exhausted";
}

int QuadResult::order() const {
  int r = system ? static_cast<int>(system->num_inverse()) : 0;
  return r + static_cast<int>(aux.size());
}

int effective_diff_order(const ExtendedSystem& sys, const SearchConfig& cfg) {
  return cfg.diff_order.value_or(3 * sys.order_h());
}

int effective_max_aux_deriv(const ExtendedSystem& sys, const SearchConfig& cfg) {
  return cfg.max_aux_deriv.value_or(effective_diff_order(sys, cfg) - sys.order_h());
}

namespace {

bool verifies(const ExtendedSystem& sys, int k) {
  try {
    return verify(sys, k, false).success;
  } catch (const DerivativeBudgetExceeded&) {
    return false;
  }
}

class Searcher {
 public:
  Searcher(const ExtendedSystem& root, const SearchConfig& cfg)
      : root_(root),
        cfg_(cfg),
        k_(effective_diff_order(root, cfg)),
        max_deriv_(effective_max_aux_deriv(root, cfg)),
        inverse_(static_cast<int>(root.num_inverse())),
        start_(std::chrono::steady_clock::now()) {}

  QuadResult run() {
    std::vector<Monomial> W;
    if (order_of(W) <= cfg_.max_aux) {
      explore(W, root_);
    } else {
      ++stats_.pr1_prunes;
    }

    QuadResult out;
    out.diff_order = k_;
    out.max_aux = cfg_.max_aux;
    out.limit_hit = limit_ != SearchStatus::Found;
    if (best_) {
      out.status = SearchStatus::Found;
      out.system = root_.extend(*best_);
      out.aux = *best_;
      out.forms = verify(*out.system, k_, true).forms;
    } else if (limit_ != SearchStatus::Found) {
      out.status = limit_;
    } else if (stats_.pr1_prunes > 0) {
      out.status = SearchStatus::Pr1Exhausted;
    } else if (stats_.pr2_prunes > 0) {
      out.status = SearchStatus::Pr2Exhausted;
    } else {
      out.status = SearchStatus::Exhausted;
    }
    stats_.wall_ms = elapsed_ms();
    stats_.attempts = 1;
    out.stats = stats_;
    return out;
  }

 private:
  int order_of(const std::vector<Monomial>& W) const {
    return inverse_ + static_cast<int>(W.size());
  }
  int bound() const { return best_ ? order_of(*best_) : cfg_.max_aux + 1; }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  bool out_of_budget() {
    if (limit_ != SearchStatus::Found) return true;
    if (cfg_.node_limit && stats_.nodes >= *cfg_.node_limit) {
      limit_ = SearchStatus::NodeLimit;
    } else if (cfg_.time_limit &&
               elapsed_ms() >= static_cast<double>(cfg_.time_limit->count())) {
      limit_ = SearchStatus::TimeLimit;
    }
    return limit_ != SearchStatus::Found;
  }

  void explore(std::vector<Monomial>& W, const ExtendedSystem& sys) {
    if (out_of_budget()) return;
    ++stats_.nodes;
    if (cfg_.progress) {
      std::optional<int> inc;
      if (best_) inc = order_of(*best_);
      cfg_.progress({stats_.nodes, W.size(), inc, W});
    }

    VerifyOutcome v;
    try {
      v = verify(sys, k_, false);
    } catch (const DerivativeBudgetExceeded&) {
      ++stats_.pr2_prunes;
      return;
    }
    if (v.success) {
      std::vector<Monomial> found = W;
      if (cfg_.shrink && W.size() > 1) {
        found = shrink(root_, W, k_, &stats_.shrink_checks, W.size() - 1);
      }
      if (order_of(found) < bound()) {
        best_ = std::move(found);
        stats_.best_order = order_of(*best_);
      }
      return;
    }

    auto target = find_target(v.remainders);
    if (!target) {
      ++stats_.dead_leaves;
      return;
    }
    auto tuples = sort_candidates(decompose(*target, W), cfg_.heuristic);
    if (tuples.empty()) {
      ++stats_.dead_leaves;
      return;
    }
    for (const auto& t : tuples) {
      if (out_of_budget()) return;
      if (order_of(W) + static_cast<int>(t.size()) >= bound()) {
        ++stats_.pr1_prunes;
        continue;
      }
      bool too_deep = std::any_of(t.begin(), t.end(), [&](const Monomial& m) {
        int c = sys.content_order(m);
        return c > max_deriv_ || c > k_;
      });
      if (too_deep) {
        ++stats_.pr2_prunes;
        continue;
      }
      ExtendedSystem child = sys.extend(t);
      W.insert(W.end(), t.begin(), t.end());
      explore(W, child);
      W.resize(W.size() - t.size());
    }
  }

  const ExtendedSystem& root_;
  const SearchConfig& cfg_;
  int k_;
  int max_deriv_;
  int inverse_;
  std::chrono::steady_clock::time_point start_;
  SearchStats stats_;
  std::optional<std::vector<Monomial>> best_;
  SearchStatus limit_ = SearchStatus::Found;
};

}  // namespace

std::vector<Monomial> shrink(const ExtendedSystem& root, const std::vector<Monomial>& W, int k,
                             std::size_t* checks, std::optional<std::size_t> max_size) {
  std::size_t n = W.size();
  std::size_t top = std::min(max_size.value_or(n == 0 ? 0 : n - 1), n == 0 ? 0 : n - 1);
  for (std::size_t s = 1; s <= top; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::vector<Monomial> subset;
      for (std::size_t i : idx) subset.push_back(W[i]);
      if (checks) ++*checks;
      if (verifies(root.extend(subset), k)) return subset;
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return W;
}

QuadResult search(const ExtendedSystem& sys, const SearchConfig& cfg) {
  return Searcher(sys, cfg).run();
}

QuadResult search(const PdeSystem& sys, const SearchConfig& cfg) {
  return search(ExtendedSystem(sys), cfg);
}

QuadResult auto_search(const ExtendedSystem& sys, const SearchConfig& cfg) {
  SearchConfig c = cfg;
  int k = effective_diff_order(sys, cfg);
  int cap = std::max(k, 3 * sys.order_h() + cfg.overshoot);
  SearchStats total;
  auto start = std::chrono::steady_clock::now();
  while (true) {
    c.diff_order = k;
    if (cfg.time_limit) {
      auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      c.time_limit = *cfg.time_limit > used ? *cfg.time_limit - used
                                             : std::chrono::milliseconds(0);
    }
    if (cfg.node_limit) {
      c.node_limit = *cfg.node_limit > total.nodes ? *cfg.node_limit - total.nodes : 0;
    }
    QuadResult r = search(sys, c);
    total.nodes += r.stats.nodes;
    total.shrink_checks += r.stats.shrink_checks;
    total.pr1_prunes += r.stats.pr1_prunes;
    total.pr2_prunes += r.stats.pr2_prunes;
    total.dead_leaves += r.stats.dead_leaves;
    total.attempts += 1;
    total.best_order = r.stats.best_order;
    bool stop = r.found() || r.limit_hit || k + 1 > cap;
    if (stop) {
      total.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      r.stats = total;
      return r;
    }
    k += 1;
    c.max_aux = std::max(1, 2 * c.max_aux);
  }
}

}  // namespace pdequad
