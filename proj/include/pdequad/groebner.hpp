#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "pdequad/polynomial.hpp"

namespace pdequad {

/// Block elimination order used for ideal reduction. The Aux block ranks
/// above the Base block; each block is compared by graded reverse
/// lexicographic order with variables taken in ascending JetVariable order
/// (so u > u_x > u_xx > ... and q1 > q2 within their blocks).
std::strong_ordering elimination_compare(const Monomial& a, const Monomial& b);

struct EliminationLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return elimination_compare(a, b) < 0;
  }
};

/// Leading monomial of a nonzero polynomial under the elimination order.
const Monomial& elimination_leading_monomial(const Polynomial& p);

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// elimination order. Elements are monic. Zero generators are ignored.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators);

/// Multivariate-division normal form of `p` modulo `basis`. `basis` must be
/// a Groebner basis for the result to be canonical.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis);

/// Whether every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis);

/// The ideal <q_i * f_i - 1> carried through a lifted system, with its
/// Groebner basis. An empty basis reduces every polynomial to itself.
class IdealBasis {
 public:
  IdealBasis() = default;
  explicit IdealBasis(std::vector<Polynomial> generators);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner() const { return groebner_; }
  bool empty() const { return groebner_.empty(); }
  static std::string term_order() { return "block(aux > base), grevlex within blocks"; }

  Polynomial reduce(const Polynomial& p) const;

 private:
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> groebner_;
};

}  // namespace pdequad
