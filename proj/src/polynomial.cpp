#include "pdequad/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pdequad {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant() const {
  return coefficient(Monomial{});
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const {
  // Graded order: the leading term has maximal degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

int Polynomial::max_order() const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.max_order());
  return best;
}

bool Polynomial::has_aux() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.has_aux(); });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& c, const Monomial& m) {
  if (c == 0) return;
  Rational prod;
  for (const auto& [pm, pc] : p.terms_) {
    prod = pc * c;
    if (m.is_one()) {
      add_term(pm, prod);
    } else {
      add_term(pm * m, prod);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms_) out.add_scaled(large, c, m);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::function<Polynomial(JetVariable)>& f) const {
  std::unordered_map<JetVariable, Polynomial> cache;
  auto image = [&](JetVariable v) -> const Polynomial& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, f(v)).first;
    return it->second;
  };
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& fac : m.factors()) term = term * image(fac.var).pow(fac.exp);
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(const std::function<Rational(JetVariable)>& value) const {
  std::unordered_map<JetVariable, Rational> cache;
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& fac : m.factors()) {
      auto it = cache.find(fac.var);
      if (it == cache.end()) it = cache.emplace(fac.var, value(fac.var)).first;
      for (unsigned i = 0; i < fac.exp; ++i) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::vector<JetVariable> Polynomial::variables() const {
  std::set<JetVariable> seen;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) seen.insert(f.var);
  }
  return {seen.begin(), seen.end()};
}

Polynomial diff_x(const Polynomial& p, const DerivativeRule& rule) {
  Polynomial out;
  std::unordered_map<JetVariable, std::optional<Polynomial>> rule_cache;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) {
      Monomial rest = m.without_one(f.var);
      Rational coef = c * f.exp;
      if (rule) {
        auto it = rule_cache.find(f.var);
        if (it == rule_cache.end()) it = rule_cache.emplace(f.var, rule(f.var)).first;
        if (it->second) {
          out.add_scaled(*it->second, coef, rest);
          continue;
        }
      }
      out.add_term(rest * Monomial(f.var.differentiated()), coef);
    }
  }
  return out;
}

Polynomial partial(const Polynomial& p, JetVariable v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.without_one(v), c * e);
  }
  return out;
}

std::string SymbolNames::name(JetVariable v) const {
  std::string base;
  if (v.is_base()) {
    base = v.index() < static_cast<int>(states.size()) ? states[v.index()]
                                                       : "u" + std::to_string(v.index() + 1);
  } else {
    base = aux_name ? aux_name(v.index()) : "w" + std::to_string(v.index() + 1);
  }
  if (v.order() > 0) base += "_" + std::string(static_cast<std::size_t>(v.order()), 'x');
  return base;
}

std::string to_string(const Monomial& m, const SymbolNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += names.name(f.var);
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string to_string(const Polynomial& p, const SymbolNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m, names);
    } else {
      out += to_string(mag) + "*" + to_string(m, names);
    }
  }
  return out;
}

}  // namespace pdequad
