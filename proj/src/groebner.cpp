#include "pdequad/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace pdequad {

namespace {

using FactorSpan = std::span<const Monomial::Factor>;

unsigned degree_of(FactorSpan f) {
  unsigned d = 0;
  for (const auto& x : f) d += x.exp;
  return d;
}

// grevlex on one block; later variables in ascending JetVariable order are
// the "smallest", and a smaller exponent there makes the monomial larger.
std::strong_ordering grevlex(FactorSpan a, FactorSpan b) {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da <=> db;
  auto i = a.rbegin();
  auto j = b.rbegin();
  while (i != a.rend() || j != b.rend()) {
    JetVariable va = i != a.rend() ? i->var : JetVariable{};
    JetVariable vb = j != b.rend() ? j->var : JetVariable{};
    unsigned ea = 0, eb = 0;
    if (j == b.rend() || (i != a.rend() && va > vb)) {
      ea = i->exp;
      ++i;
    } else if (i == a.rend() || vb > va) {
      eb = j->exp;
      ++j;
    } else {
      ea = i->exp;
      eb = j->exp;
      ++i;
      ++j;
    }
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::pair<FactorSpan, FactorSpan> split_blocks(const Monomial& m) {
  auto f = m.factors();
  auto first_aux = std::find_if(f.begin(), f.end(), [](const auto& x) { return x.var.is_aux(); });
  auto n = static_cast<std::size_t>(first_aux - f.begin());
  return {f.subspan(0, n), f.subspan(n)};
}

struct LeadingTerm {
  Monomial monomial;
  Rational coefficient;
};

LeadingTerm leading_term(const Polynomial& p) {
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (elimination_compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      out = out * Monomial(fa[i].var, fa[i].exp);
      ++i;
    } else if (i == fa.size() || fb[j].var < fa[i].var) {
      out = out * Monomial(fb[j].var, fb[j].exp);
      ++j;
    } else {
      out = out * Monomial(fa[i].var, std::max(fa[i].exp, fb[j].exp));
      ++i;
      ++j;
    }
  }
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (const auto& f : a.factors()) {
    if (b.exponent(f.var) > 0) return false;
  }
  return true;
}

Polynomial make_monic(const Polynomial& p) {
  return p * (Rational(1) / leading_term(p).coefficient);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  LeadingTerm lf = leading_term(f);
  LeadingTerm lg = leading_term(g);
  Monomial l = lcm(lf.monomial, lg.monomial);
  Polynomial s;
  s.add_scaled(f, Rational(1) / lf.coefficient, *lf.monomial.divide_into(l));
  s.add_scaled(g, Rational(-1) / lg.coefficient, *lg.monomial.divide_into(l));
  return s;
}

}  // namespace

std::strong_ordering elimination_compare(const Monomial& a, const Monomial& b) {
  auto [ab, aa] = split_blocks(a);
  auto [bb, ba] = split_blocks(b);
  if (auto c = grevlex(aa, ba); c != 0) return c;
  return grevlex(ab, bb);
}

const Monomial& elimination_leading_monomial(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (elimination_compare(it->first, best->first) > 0) best = it;
  }
  return best->first;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis) {
  if (basis.empty() || p.is_zero()) return p;
  std::vector<LeadingTerm> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(leading_term(g));

  std::map<Monomial, Rational, EliminationLess> work(p.terms().begin(), p.terms().end());
  Polynomial result;
  Rational scale;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial& m = top->first;
    std::size_t k = 0;
    std::optional<Monomial> quotient;
    for (; k < leads.size(); ++k) {
      quotient = leads[k].monomial.divide_into(m);
      if (quotient) break;
    }
    if (!quotient) {
      result.add_term(m, top->second);
      work.erase(top);
      continue;
    }
    scale = top->second / leads[k].coefficient;
    for (const auto& [gm, gc] : basis[k].terms()) {
      Monomial t = gm * *quotient;
      auto [it, inserted] = work.try_emplace(std::move(t), 0);
      it->second -= scale * gc;
      if (it->second == 0) work.erase(it);
    }
  }
  return result;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators) {
  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial li = leading_term(basis[i]).monomial;
    Monomial lj = leading_term(basis[j]).monomial;
    if (coprime(li, lj)) continue;  // Buchberger's first criterion
    Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial li = leading_term(basis[i]).monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial lj = leading_term(basis[j]).monomial;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    LeadingTerm lt = leading_term(minimal[i]);
    Polynomial tail = minimal[i];
    tail.add_term(lt.monomial, -lt.coefficient);
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial reduced = normal_form(tail, others);
    reduced.add_term(lt.monomial, lt.coefficient);
    minimal[i] = make_monic(reduced);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return elimination_compare(leading_term(a).monomial, leading_term(b).monomial) < 0;
  });
  return minimal;
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

IdealBasis::IdealBasis(std::vector<Polynomial> generators)
    : generators_(std::move(generators)), groebner_(buchberger(generators_)) {}

Polynomial IdealBasis::reduce(const Polynomial& p) const {
  if (groebner_.empty() || !p.has_aux()) return p;
  return normal_form(p, groebner_);
}

}  // namespace pdequad
