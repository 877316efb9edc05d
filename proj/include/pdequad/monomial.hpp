#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pdequad/jet.hpp"

namespace pdequad {

/// A power product of jet variables with positive exponents. The empty
/// product is the constant monomial 1.
class Monomial {
 public:
  struct Factor {
    JetVariable var;
    unsigned exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  explicit Monomial(JetVariable v, unsigned exp = 1);
  Monomial(std::initializer_list<Factor> factors);

  static Monomial one() { return {}; }

  /// Factors sorted by ascending variable; exponents are never zero.
  std::span<const Factor> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  unsigned degree() const { return degree_; }
  unsigned exponent(JetVariable v) const;

  /// Maximum derivative order over all variables present; 0 for 1.
  int max_order() const;
  /// Same, restricted to Base variables.
  int max_base_order() const;

  bool is_one() const { return factors_.empty(); }
  /// True for a bare variable with exponent 1.
  bool is_variable() const { return factors_.size() == 1 && factors_[0].exp == 1; }
  bool has_aux() const;

  bool divides(const Monomial& other) const;
  /// `other / *this` when divisible.
  std::optional<Monomial> divide_into(const Monomial& other) const;

  /// Removes one power of `v`; `v` must be present.
  Monomial without_one(JetVariable v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; equal degrees are
/// compared on exponent vectors in variable order, where a larger exponent of
/// an earlier variable sorts first. So 1 < u < u_x < u^2 < ... and
/// u^3 < u_x*u^2 < u_x^2*u.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace pdequad
