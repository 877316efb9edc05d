#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdequad/groebner.hpp"
#include "pdequad/polynomial.hpp"

namespace pdequad {

/// u_t = p(u, u_x, ..., u_x^h) for each state. Right-hand sides range over
/// Base variables; a lifted system may also use inverse symbols Aux(q, 0).
class PdeSystem {
 public:
  PdeSystem() = default;
  PdeSystem(std::vector<std::string> state_names, std::vector<Polynomial> rhs);

  const std::vector<std::string>& state_names() const { return names_; }
  const std::vector<Polynomial>& rhs() const { return rhs_; }
  const Polynomial& rhs(int state) const { return rhs_.at(static_cast<std::size_t>(state)); }
  std::size_t size() const { return rhs_.size(); }
  /// Highest Base derivative order over all right-hand sides.
  int order_h() const { return order_h_; }

  friend bool operator==(const PdeSystem&, const PdeSystem&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Polynomial> rhs_;
  int order_h_ = 0;
};

struct AuxDefinition {
  enum class Kind : std::uint8_t { Monomial, Inverse };

  Kind kind = Kind::Monomial;
  /// Defining monomial over Base and inverse symbols (Monomial kind only).
  Monomial monomial;
  /// f in q = 1/f (Inverse kind only).
  Polynomial factor;
  /// Highest Base derivative order hidden inside the definition.
  int c = 0;

  bool is_inverse() const { return kind == Kind::Inverse; }

  friend bool operator==(const AuxDefinition&, const AuxDefinition&) = default;
};

class DuplicateAuxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A PDE system with registered auxiliaries. Aux ids are positions in
/// auxes(); inverse auxiliaries (from rational lifting) come first.
///
/// All derived polynomials live in the ring of Base symbols and inverse
/// symbols q_i = Aux(i, 0), reduced modulo the inverse ideal. Derived
/// quantities are memoized in a cache shared by every system extended from
/// the same root, keyed by defining monomials rather than aux ids.
class ExtendedSystem {
 public:
  ExtendedSystem();
  explicit ExtendedSystem(PdeSystem base);
  /// `base` uses Aux(i, 0) for 1/inverse_factors[i]. `x_relations[j]`, when
  /// given, is the x-derivative of state j as a polynomial in the lifted
  /// ring; related states then have no independent derivatives. Throws
  /// std::invalid_argument when a relation uses derivatives of a related
  /// state or does not commute with the state's time derivative.
  ExtendedSystem(PdeSystem base, std::vector<Polynomial> inverse_factors,
                 std::map<int, Polynomial> x_relations = {});

  const PdeSystem& base() const { return base_; }
  const std::vector<AuxDefinition>& auxes() const { return auxes_; }
  const std::vector<Polynomial>& aux_rhs() const { return aux_rhs_; }
  const IdealBasis& ideal() const;
  const std::map<int, Polynomial>& x_relations() const;
  std::size_t num_inverse() const { return num_inverse_; }
  std::size_t num_monomial() const { return auxes_.size() - num_inverse_; }
  /// Defining monomials of the Monomial-kind auxes, in registration order.
  std::vector<Monomial> monomial_auxes() const;
  /// Highest effective order of the system: Base orders of the right-hand
  /// sides and the orders hidden in inverse factors.
  int order_h() const;

  /// Derivative content of a monomial over Base and inverse symbols.
  int content_order(const Monomial& m) const;
  bool is_registered(const Monomial& m) const;

  /// New system with monomial auxes appended; throws DuplicateAuxError for
  /// an already-registered or repeated definition and std::invalid_argument
  /// for a constant or single-variable definition.
  ExtendedSystem extend(std::span<const Monomial> new_auxes) const;

  Polynomial reduce(const Polynomial& p) const;
  /// Rewrites derivatives of related states through their x-relations, then
  /// reduces.
  Polynomial resolve_relations(const Polynomial& p) const;
  /// Total x-derivative in the lifted ring, reduced.
  Polynomial diff_x(const Polynomial& p) const;
  /// d^h/dx^h of the right-hand side of `state`, reduced.
  const Polynomial& dx_rhs(int state, int h) const;
  /// d^m/dx^m of a defining monomial, reduced.
  const Polynomial& expansion(const Monomial& def, int m) const;
  /// Reduced product expansion(a, ma) * expansion(b, mb).
  const Polynomial& product(const Monomial& a, int ma, const Monomial& b, int mb) const;
  /// Chain-rule time derivative of a monomial, reduced.
  const Polynomial& time_derivative(const Monomial& w) const;
  /// Time derivative of inverse symbol q_i: -q_i^2 * d/dt(f_i), reduced.
  const Polynomial& inverse_time_derivative(int id) const;

  /// Aux names: inverses q1, q2, ...; monomials w1, w2, ...
  std::string aux_name(int id) const;
  SymbolNames names() const;

  /// Structural equality of the base system, auxes, aux right-hand sides
  /// and ideal generators.
  friend bool operator==(const ExtendedSystem& a, const ExtendedSystem& b);

 private:
  struct Cache;

  PdeSystem base_;
  std::vector<AuxDefinition> auxes_;
  std::vector<Polynomial> aux_rhs_;
  std::size_t num_inverse_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// w_t for a monomial w over the system's Base variables.
Polynomial time_derivative_monomial(const Monomial& w, const ExtendedSystem& sys);
/// q_t for the inverse aux `id` of a lifted system.
Polynomial time_derivative_inverse(int id, const ExtendedSystem& sys);

}  // namespace pdequad
