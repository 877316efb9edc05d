#include "pdequad/rational_function.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pdequad {

Monomial monomial_content(const Polynomial& p) {
  if (p.is_zero()) return {};
  auto it = p.terms().begin();
  std::map<JetVariable, unsigned> common;
  for (const auto& f : it->first.factors()) common[f.var] = f.exp;
  for (++it; it != p.terms().end() && !common.empty(); ++it) {
    for (auto c = common.begin(); c != common.end();) {
      unsigned e = it->first.exponent(c->first);
      if (e == 0) {
        c = common.erase(c);
      } else {
        c->second = std::min(c->second, e);
        ++c;
      }
    }
  }
  Monomial out;
  for (const auto& [v, e] : common) out = out * Monomial(v, e);
  return out;
}

Polynomial divide_by_monomial(const Polynomial& p, const Monomial& m) {
  if (m.is_one()) return p;
  Polynomial out;
  for (const auto& [t, c] : p.terms()) {
    auto q = m.divide_into(t);
    if (!q) throw std::logic_error("divide_by_monomial: monomial does not divide term");
    out.add_term(*q, c);
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.constant();
    den_ = Polynomial(1);
    return;
  }
  Monomial a = monomial_content(num_);
  Monomial b = monomial_content(den_);
  Monomial g;
  for (const auto& f : a.factors()) {
    unsigned e = std::min(f.exp, b.exponent(f.var));
    if (e > 0) g = g * Monomial(f.var, e);
  }
  if (!g.is_one()) {
    num_ = divide_by_monomial(num_, g);
    den_ = divide_by_monomial(den_, g);
  }
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.constant();
    den_ = Polynomial(1);
    return;
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction out;
  out.num_ = num_.pow(e);
  out.den_ = den_.pow(e);
  out.normalize();
  return out;
}

}  // namespace pdequad
