#pragma once

#include "pdequad/polynomial.hpp"

namespace pdequad {

/// numerator / denominator with the denominator nonzero.
///
/// Normal form: a constant denominator is folded into the numerator (so
/// polynomials have denominator exactly 1); otherwise the common monomial
/// factor is cancelled and the denominator's leading coefficient is 1.
/// Non-monomial common factors are left in place.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial p)  // NOLINT: polynomials convert implicitly
      : num_(std::move(p)), den_(1) {}
  /// Throws std::domain_error when `den` is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ *= Rational(-1);
    return a;
  }
  RationalFunction pow(unsigned e) const;

  /// Structural equality of normal forms.
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Greatest common monomial divisor of all terms (1 for the zero polynomial).
Monomial monomial_content(const Polynomial& p);

/// Divides every term by `m`; `m` must divide each term.
Polynomial divide_by_monomial(const Polynomial& p, const Monomial& m);

}  // namespace pdequad
