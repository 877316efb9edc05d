#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdequad/pde_system.hpp"
#include "pdequad/rational_function.hpp"

namespace pdequad {

/// A PDE system whose right-hand sides may be rational in the jet variables.
struct RationalSystem {
  std::vector<std::string> state_names;
  std::vector<RationalFunction> rhs;
  /// Optional x-derivatives of states, keyed by state index.
  std::map<int, RationalFunction> x_relations;

  bool is_polynomial() const;
};

/// d = content * prod f_i^{j_i}; every f_i has leading coefficient 1.
struct FactoredDenominator {
  struct Factor {
    Polynomial f;
    unsigned multiplicity;
  };
  Rational content = 1;
  std::vector<Factor> factors;
};

/// Content, monomial variable powers, then perfect-power detection of the
/// remainder; anything left is one factor. Throws std::domain_error on zero.
FactoredDenominator factor_denominator(const Polynomial& d);

/// g with g^j == p and leading coefficient 1, when one exists. `p` must
/// have leading coefficient 1.
std::optional<Polynomial> exact_root(const Polynomial& p, unsigned j);

/// Introduces q_i = 1/f_i for each distinct denominator factor and rewrites
/// the system over the q_i, reduced modulo <q_i f_i - 1>. A polynomial system
/// comes back with no auxes and an empty ideal.
ExtendedSystem polynomialize(const RationalSystem& sys);

}  // namespace pdequad
