#include "pdequad/rational_lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdequad {

bool RationalSystem::is_polynomial() const {
  return std::all_of(rhs.begin(), rhs.end(), [](const auto& r) { return r.is_polynomial(); });
}

namespace {

std::optional<Monomial> monomial_root(const Monomial& m, unsigned j) {
  Monomial out;
  for (const auto& f : m.factors()) {
    if (f.exp % j != 0) return std::nullopt;
    out = out * Monomial(f.var, f.exp / j);
  }
  return out;
}

}  // namespace

std::optional<Polynomial> exact_root(const Polynomial& p, unsigned j) {
  if (j == 0 || p.is_zero()) return std::nullopt;
  if (j == 1) return p;
  auto lead = monomial_root(p.leading_monomial(), j);
  if (!lead || p.leading_coefficient() != 1) return std::nullopt;

  // Term-by-term Newton step: the leading term of p - g^j fixes the next
  // term t of g through j * LT(g)^(j-1) * t.
  Polynomial g(*lead);
  Monomial lead_pow = Monomial();
  for (unsigned i = 0; i + 1 < j; ++i) lead_pow = lead_pow * *lead;
  for (std::size_t steps = 0; steps <= p.size(); ++steps) {
    Polynomial rem = p - g.pow(j);
    if (rem.is_zero()) return g;
    auto t = lead_pow.divide_into(rem.leading_monomial());
    if (!t || lex_compare(*t, *lead) >= 0) return std::nullopt;
    g.add_term(*t, rem.leading_coefficient() / Rational(j));
  }
  return std::nullopt;
}

FactoredDenominator factor_denominator(const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  FactoredDenominator out;
  out.content = d.leading_coefficient();
  Polynomial r = d * (Rational(1) / out.content);

  Monomial mc = monomial_content(r);
  for (const auto& f : mc.factors()) {
    out.factors.push_back({Polynomial::variable(f.var), f.exp});
  }
  r = divide_by_monomial(r, mc);
  if (r.is_constant()) return out;

  unsigned degree = r.degree();
  for (unsigned j = degree; j >= 2; --j) {
    if (degree % j != 0) continue;
    if (auto g = exact_root(r, j)) {
      out.factors.push_back({std::move(*g), j});
      return out;
    }
  }
  out.factors.push_back({std::move(r), 1});
  return out;
}

ExtendedSystem polynomialize(const RationalSystem& sys) {
  std::vector<Polynomial> factors;
  auto lift = [&](const RationalFunction& r) {
    if (r.is_polynomial()) return r.numerator() * (Rational(1) / r.denominator().constant());
    FactoredDenominator fd = factor_denominator(r.denominator());
    Polynomial p = r.numerator() * (Rational(1) / fd.content);
    for (const auto& [f, mult] : fd.factors) {
      auto it = std::find(factors.begin(), factors.end(), f);
      auto id = static_cast<int>(it - factors.begin());
      if (it == factors.end()) factors.push_back(f);
      p = p * Polynomial::variable(JetVariable::aux(id), mult);
    }
    return p;
  };
  std::vector<Polynomial> rhs;
  for (const auto& r : sys.rhs) rhs.push_back(lift(r));
  std::map<int, Polynomial> relations;
  for (const auto& [j, r] : sys.x_relations) relations.emplace(j, lift(r));
  return ExtendedSystem(PdeSystem(sys.state_names, std::move(rhs)), std::move(factors),
                        std::move(relations));
}

}  // namespace pdequad
