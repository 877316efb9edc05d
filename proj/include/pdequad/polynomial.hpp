#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdequad/jet.hpp"
#include "pdequad/monomial.hpp"
#include "pdequad/rational.hpp"

namespace pdequad {

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in lex_compare order, so the last term is the leading one. Zero
/// coefficients are never stored; the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(JetVariable v, unsigned exp = 1) {
    return Polynomial(Monomial(v, exp));
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of 1).
  Rational constant() const;
  Rational coefficient(const Monomial& m) const;

  /// Largest monomial under lex_compare; requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  unsigned degree() const;
  int max_order() const;
  bool is_quadratic() const { return degree() <= 2; }
  bool has_aux() const;

  /// Adds `c * m`, removing the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);
  /// `*this += c * m * p` without temporaries.
  void add_scaled(const Polynomial& p, const Rational& c, const Monomial& m = {});

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, int c) { return a *= Rational(c); }
  friend Polynomial operator*(int c, Polynomial a) { return a *= Rational(c); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned e) const;

  /// Applies `f` to every variable, substituting the returned polynomial.
  Polynomial substitute(const std::function<Polynomial(JetVariable)>& f) const;

  /// Evaluates at a point; `value` is queried once per distinct variable.
  Rational evaluate(const std::function<Rational(JetVariable)>& value) const;

  /// Variables occurring in any term, ascending.
  std::vector<JetVariable> variables() const;

 private:
  TermMap terms_;
};

/// Supplies the x-derivative of a variable. Returning nullopt falls back to
/// the formal rule v^(m) -> v^(m + 1).
using DerivativeRule = std::function<std::optional<Polynomial>(JetVariable)>;

/// Total spatial derivative: Leibniz rule per term with u^(h) -> u^(h+1).
Polynomial diff_x(const Polynomial& p, const DerivativeRule& rule = {});

/// Formal partial derivative treating `v` as an independent symbol.
Polynomial partial(const Polynomial& p, JetVariable v);

/// Naming context for rendering. `aux_name(i)` names auxiliary `i`.
struct SymbolNames {
  std::vector<std::string> states;
  std::function<std::string(int)> aux_name;

  std::string name(JetVariable v) const;
};

/// Canonical text form: `u^3*u_xxx - 3/2*u*w1_x + 2`. Terms are listed from
/// the leading monomial down; factors follow variable order.
std::string to_string(const Monomial& m, const SymbolNames& names);
std::string to_string(const Polynomial& p, const SymbolNames& names);

}  // namespace pdequad
