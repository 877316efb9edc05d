#include "pdequad/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace pdequad {

Monomial::Monomial(JetVariable v, unsigned exp) {
  if (exp > 0) {
    factors_.push_back({v, exp});
    degree_ = exp;
  }
}

Monomial::Monomial(std::initializer_list<Factor> factors) {
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), f.var,
                               [](const Factor& a, JetVariable v) { return a.var < v; });
    if (it != factors_.end() && it->var == f.var) {
      it->exp += f.exp;
    } else {
      factors_.insert(it, f);
    }
    degree_ += f.exp;
  }
}

unsigned Monomial::exponent(JetVariable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& a, JetVariable x) { return a.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

int Monomial::max_order() const {
  int best = 0;
  for (const auto& f : factors_) best = std::max(best, f.var.order());
  return best;
}

int Monomial::max_base_order() const {
  int best = 0;
  for (const auto& f : factors_) {
    if (f.var.is_base()) best = std::max(best, f.var.order());
  }
  return best;
}

bool Monomial::has_aux() const {
  return !factors_.empty() && factors_.back().var.is_aux();
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || factors_.size() > other.factors_.size()) return false;
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
    ++it;
  }
  return true;
}

std::optional<Monomial> Monomial::divide_into(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial q;
  auto it = factors_.begin();
  for (const auto& f : other.factors_) {
    while (it != factors_.end() && it->var < f.var) ++it;
    unsigned sub = (it != factors_.end() && it->var == f.var) ? it->exp : 0;
    if (f.exp > sub) {
      q.factors_.push_back({f.var, f.exp - sub});
      q.degree_ += f.exp - sub;
    }
  }
  return q;
}

Monomial Monomial::without_one(JetVariable v) const {
  Monomial out = *this;
  auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                         [v](const Factor& f) { return f.var == v; });
  assert(it != out.factors_.end());
  if (--it->exp == 0) out.factors_.erase(it);
  --out.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var < j->var) {
      out.factors_.push_back(*i++);
    } else if (j->var < i->var) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var.key()) * 31u + f.exp) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].var != fb[i].var) {
      // The monomial carrying the earlier variable has the larger exponent on it.
      return fa[i].var < fb[i].var ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
    if (fa[i].exp != fb[i].exp) {
      return fa[i].exp > fb[i].exp ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
  }
  // Equal degree and equal common prefix implies equal sizes.
  return fa.size() <=> fb.size();
}

}  // namespace pdequad
