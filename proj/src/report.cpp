#include "pdequad/report.hpp"

#include <cstdio>

#include "pdequad/parser.hpp"
#include "pdequad/verifier.hpp"

namespace pdequad {

namespace {

std::string factor_string(const Polynomial& f, const SymbolNames& names) {
  std::string s = to_string(f, names);
  return f.size() == 1 ? s : "(" + s + ")";
}

}  // namespace

std::string aux_definition_string(const ExtendedSystem& sys, int id) {
  const AuxDefinition& a = sys.auxes().at(static_cast<std::size_t>(id));
  SymbolNames names = sys.names();
  if (a.is_inverse()) return "1/" + factor_string(a.factor, names);
  Monomial num;
  std::vector<std::string> den;
  for (const auto& f : a.monomial.factors()) {
    if (f.var.is_base()) {
      num = num * Monomial(f.var, f.exp);
      continue;
    }
    const Polynomial& factor = sys.auxes().at(static_cast<std::size_t>(f.var.index())).factor;
    std::string s = factor_string(factor, names);
    if (f.exp > 1) {
      if (factor.size() == 1 && !factor.terms().begin()->first.is_variable()) s = "(" + s + ")";
      s += "^" + std::to_string(f.exp);
    }
    den.push_back(std::move(s));
  }
  std::string out = to_string(Polynomial(num), names);
  if (den.empty()) return out;
  if (den.size() == 1) return out + "/" + den[0];
  std::string d = den[0];
  for (std::size_t i = 1; i < den.size(); ++i) d += "*" + den[i];
  return out + "/(" + d + ")";
}

nlohmann::json make_report(const RunInput& input, const RunOptions& opts,
                           const ExtendedSystem& root, const QuadResult& r) {
  using nlohmann::json;
  const SearchConfig& cfg = opts.search;
  json in = {{"source", input.source}, {"states", root.base().state_names()}};
  in["benchmark"] = input.benchmark ? json(*input.benchmark) : json(nullptr);

  json config = {
      {"heuristic", to_string(cfg.heuristic.kind)},
      {"max_aux", cfg.max_aux},
      {"diff_order", effective_diff_order(root, cfg)},
      {"max_aux_deriv", effective_max_aux_deriv(root, cfg)},
      {"shrink", cfg.shrink},
      {"auto", opts.auto_mode},
  };
  config["node_limit"] = cfg.node_limit ? json(*cfg.node_limit) : json(nullptr);
  config["time_limit_ms"] = cfg.time_limit ? json(cfg.time_limit->count()) : json(nullptr);

  json result = {{"status", to_string(r.status)}, {"diff_order", r.diff_order}};
  json aux = json::array();
  json quad = json::array();
  if (r.system) {
    result["order"] = r.order();
    for (std::size_t i = 0; i < r.system->auxes().size(); ++i) {
      auto id = static_cast<int>(i);
      aux.push_back({{"name", r.system->aux_name(id)},
                     {"definition", aux_definition_string(*r.system, id)},
                     {"kind", r.system->auxes()[i].is_inverse() ? "inverse" : "monomial"}});
    }
    for (auto& line : render_quadratic_system(*r.system, r.forms)) quad.push_back(line);
  } else {
    result["order"] = nullptr;
  }
  result["aux_vars"] = aux;
  result["quadratic_system"] = quad;

  json stats = {{"nodes", r.stats.nodes},
                {"shrink_checks", r.stats.shrink_checks},
                {"pr1_prunes", r.stats.pr1_prunes},
                {"pr2_prunes", r.stats.pr2_prunes},
                {"attempts", r.stats.attempts},
                {"wall_ms", r.stats.wall_ms}};
  return {{"input", in}, {"config", config}, {"result", result}, {"stats", stats}};
}

std::string format_report(const QuadResult& r) {
  std::string out = "status: " + to_string(r.status) + "\n";
  if (!r.system) {
    out += "no quadratization within the bounds (k = " + std::to_string(r.diff_order) +
           ", N = " + std::to_string(r.max_aux) + ")\n";
    return out;
  }
  out += "order: " + std::to_string(r.order()) + "\n";
  out += "auxiliary variables:";
  out += r.system->auxes().empty() ? " (none)\n" : "\n";
  for (std::size_t i = 0; i < r.system->auxes().size(); ++i) {
    auto id = static_cast<int>(i);
    out += "  " + r.system->aux_name(id) + " = " + aux_definition_string(*r.system, id) + "\n";
  }
  out += "quadratic system (k = " + std::to_string(r.diff_order) + "):\n";
  for (auto& line : render_quadratic_system(*r.system, r.forms)) out += "  " + line + "\n";
  return out;
}

}  // namespace pdequad
