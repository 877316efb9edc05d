#include "pdequad/verifier.hpp"

#include <unordered_map>

namespace pdequad {

DerivativeBudgetExceeded::DerivativeBudgetExceeded(int aux_id, int c, int k)
    : std::runtime_error("auxiliary " + std::to_string(aux_id) + " has derivative content " +
                         std::to_string(c) + " above the differential order " +
                         std::to_string(k)),
      aux_id(aux_id),
      c(c),
      k(k) {}

namespace {

std::size_t support_hash(const Polynomial& p) {
  std::size_t h = p.size();
  for (const auto& [m, c] : p.terms()) h = h * 1315423911u ^ m.hash();
  return h;
}

Monomial aux_definition(const ExtendedSystem& sys, int id) {
  const AuxDefinition& a = sys.auxes().at(static_cast<std::size_t>(id));
  return a.is_inverse() ? Monomial(JetVariable::aux(id)) : a.monomial;
}

}  // namespace

GeneratorSet build_generators(const ExtendedSystem& sys, int k) {
  const auto& auxes = sys.auxes();
  for (std::size_t i = 0; i < auxes.size(); ++i) {
    if (auxes[i].c > k) throw DerivativeBudgetExceeded(static_cast<int>(i), auxes[i].c, k);
  }
  GeneratorSet g;
  g.V.push_back({Monomial(), Monomial(), 0});
  for (std::size_t j = 0; j < sys.base().size(); ++j) {
    Monomial state(JetVariable::base(static_cast<int>(j)));
    for (int h = 0; h <= k; ++h) {
      g.V.push_back({Monomial(JetVariable::base(static_cast<int>(j), h)), state, h});
    }
  }
  for (std::size_t i = 0; i < auxes.size(); ++i) {
    auto id = static_cast<int>(i);
    Monomial def = aux_definition(sys, id);
    for (int m = 0; m <= k - auxes[i].c; ++m) {
      g.V.push_back({Monomial(JetVariable::aux(id, m)), def, m});
    }
  }
  for (const auto& v : g.V) g.V_expansions.push_back(&sys.expansion(v.definition, v.order));

  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  for (std::size_t b = 0; b < g.V.size(); ++b) {
    for (std::size_t a = 0; a <= b; ++a) {
      const Polynomial& p =
          sys.product(g.V[a].definition, g.V[a].order, g.V[b].definition, g.V[b].order);
      auto& bucket = seen[support_hash(p)];
      bool duplicate = false;
      for (std::size_t idx : bucket) {
        if (*g.V2_expansions[idx] == p) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      bucket.push_back(g.V2.size());
      g.V2.push_back({a, b});
      g.V2_expansions.push_back(&p);
    }
  }
  return g;
}

bool Echelon::insert(Polynomial row, Polynomial combination) {
  Rational c;
  while (!row.is_zero()) {
    auto it = rows_.find(row.terms().begin()->first);
    if (it == rows_.end()) break;
    c = row.terms().begin()->second;
    row.add_scaled(it->second.poly, -c);
    if (track_) combination.add_scaled(it->second.combination, -c);
  }
  if (row.is_zero()) {
    ++zero_rows_;
    return false;
  }
  Rational inv = Rational(1) / row.terms().begin()->second;
  row *= inv;
  if (track_) combination *= inv;
  Monomial pivot = row.terms().begin()->first;
  rows_.emplace(std::move(pivot), Row{std::move(row), std::move(combination)});
  return true;
}

Echelon::Reduced Echelon::reduce(Polynomial p) const {
  Reduced out;
  std::optional<Monomial> bound;
  Rational c;
  while (!p.is_zero()) {
    auto it = bound ? p.terms().upper_bound(*bound) : p.terms().begin();
    if (it == p.terms().end()) break;
    Monomial m = it->first;
    auto row = rows_.find(m);
    if (row != rows_.end()) {
      c = it->second;
      p.add_scaled(row->second.poly, -c);
      if (track_) out.combination.add_scaled(row->second.combination, c);
    }
    bound = std::move(m);
  }
  out.remainder = std::move(p);
  return out;
}

Echelon row_reduce(const GeneratorSet& g, bool track) {
  Echelon e(track);
  for (std::size_t i = 0; i < g.V2.size(); ++i) {
    e.insert(*g.V2_expansions[i], track ? Polynomial(g.product_symbol(i)) : Polynomial());
  }
  return e;
}

std::vector<const Polynomial*> targets(const ExtendedSystem& sys) {
  std::vector<const Polynomial*> out;
  for (const auto& p : sys.base().rhs()) out.push_back(&p);
  for (const auto& p : sys.aux_rhs()) out.push_back(&p);
  return out;
}

VerifyOutcome verify(const ExtendedSystem& sys, int k, bool forms) {
  GeneratorSet g = build_generators(sys, k);
  Echelon e = row_reduce(g, forms);
  VerifyOutcome out;
  std::vector<Polynomial> combos;
  for (const Polynomial* p : targets(sys)) {
    Echelon::Reduced r = e.reduce(*p);
    if (!r.remainder.is_zero()) out.remainders.push_back(std::move(r.remainder));
    if (forms) combos.push_back(std::move(r.combination));
  }
  out.success = out.remainders.empty();
  if (out.success && forms) out.forms = std::move(combos);
  return out;
}

VerifyOutcome verify(const ExtendedSystem& root, std::span<const Monomial> W, int k, bool forms) {
  return verify(root.extend(W), k, forms);
}

Polynomial expand_form(const ExtendedSystem& sys, const Polynomial& form) {
  return sys.reduce(form.substitute([&](JetVariable v) {
    if (v.is_base()) return sys.expansion(Monomial(v.with_order(0)), v.order());
    return sys.expansion(aux_definition(sys, v.index()), v.order());
  }));
}

bool forms_are_sound(const ExtendedSystem& sys, int k, std::span<const Polynomial> forms) {
  auto P = targets(sys);
  if (forms.size() != P.size()) return false;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].degree() > 2) return false;
    for (JetVariable v : forms[i].variables()) {
      if (v.is_base() && v.order() > k) return false;
      if (v.is_aux()) {
        if (v.index() >= static_cast<int>(sys.auxes().size())) return false;
        if (v.order() > k - sys.auxes()[static_cast<std::size_t>(v.index())].c) return false;
      }
    }
    if (expand_form(sys, forms[i]) != *P[i]) return false;
  }
  return true;
}

std::vector<std::string> render_quadratic_system(const ExtendedSystem& sys,
                                                 std::span<const Polynomial> forms) {
  SymbolNames names = sys.names();
  std::vector<std::string> out;
  std::size_t n = sys.base().size();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::string lhs = i < n ? sys.base().state_names()[i] : sys.aux_name(static_cast<int>(i - n));
    out.push_back(lhs + "_t = " + to_string(forms[i], names));
  }
  return out;
}

}  // namespace pdequad
