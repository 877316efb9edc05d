#pragma once

#include <random>
#include <string>

#include "pdequad/decomposer.hpp"
#include "pdequad/parser.hpp"
#include "pdequad/search.hpp"
#include "pdequad/verifier.hpp"

namespace testing {

using namespace pdequad;

inline JetVariable U(int h = 0) { return JetVariable::base(0, h); }
inline JetVariable V(int h = 0) { return JetVariable::base(1, h); }
inline Polynomial u(int h = 0) { return Polynomial::variable(U(h)); }
inline Polynomial v(int h = 0) { return Polynomial::variable(V(h)); }

inline ExtendedSystem lifted(const std::string& src) {
  return polynomialize(parse_source(src).system);
}

/// Polynomial over the symbols of `sys`, written in the DSL.
inline Polynomial P(const ExtendedSystem& sys, const std::string& expr) {
  RationalFunction r = parse_expression(expr, resolver_for(sys));
  if (!r.is_polynomial()) throw std::invalid_argument("not a polynomial: " + expr);
  return sys.reduce(r.numerator());
}

inline Monomial M(const ExtendedSystem& sys, const std::string& expr) {
  Polynomial p = P(sys, expr);
  if (p.size() != 1) throw std::invalid_argument("not a monomial: " + expr);
  return p.terms().begin()->first;
}

inline std::string str(const ExtendedSystem& sys, const Polynomial& p) {
  return to_string(p, sys.names());
}

/// Random polynomial over u, u_x, u_xx, v, v_x with small coefficients.
inline Polynomial random_poly(std::mt19937& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> coef(-5, 5), e(0, max_exp), n(1, terms);
  const JetVariable vars[] = {U(0), U(1), U(2), V(0), V(1)};
  Polynomial p;
  for (int t = n(rng); t > 0; --t) {
    Monomial m;
    for (JetVariable x : vars) {
      if (int k = e(rng)) m = m * Monomial(x, static_cast<unsigned>(k));
    }
    p.add_term(m, Rational(coef(rng)));
  }
  return p;
}

}  // namespace testing
