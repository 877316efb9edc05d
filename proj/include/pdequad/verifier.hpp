#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdequad/pde_system.hpp"

namespace pdequad {

class DerivativeBudgetExceeded : public std::runtime_error {
 public:
  DerivativeBudgetExceeded(int aux_id, int c, int k);
  int aux_id;
  int c;
  int k;
};

/// One element of V: the symbol used in quadratic forms, and the defining
/// monomial differentiated `order` times that it stands for.
struct Generator {
  Monomial symbol;      // 1, a Base variable, or Aux(i, m)
  Monomial definition;  // 1, the bare state, q_i, or the aux monomial
  int order = 0;
};

/// V and V^2 for an extended system at differential order k. Expansions
/// point into the system's shared cache and stay valid while any system
/// derived from the same root is alive.
struct GeneratorSet {
  struct Product {
    std::size_t a;
    std::size_t b;
  };

  std::vector<Generator> V;
  std::vector<const Polynomial*> V_expansions;
  /// Products V[a] * V[b], a <= b, enumerated by b then a. Products whose
  /// expansion duplicates an earlier one are left out.
  std::vector<Product> V2;
  std::vector<const Polynomial*> V2_expansions;

  Monomial product_symbol(std::size_t i) const {
    return V[V2[i].a].symbol * V[V2[i].b].symbol;
  }
};

/// Throws DerivativeBudgetExceeded when an aux has c_i > k.
GeneratorSet build_generators(const ExtendedSystem& sys, int k);

/// Row-echelon form over the monomial basis b taken in ascending lex order.
/// As in a reduced row-echelon matrix whose columns follow b, each row's
/// pivot is its smallest monomial, with coefficient 1. Rows may carry the
/// combination of V^2 symbol products they equal.
class Echelon {
 public:
  explicit Echelon(bool track) : track_(track) {}

  /// Adds a row; returns false when it reduced to zero.
  bool insert(Polynomial row, Polynomial combination = {});

  struct Reduced {
    Polynomial remainder;
    Polynomial combination;
  };
  /// Full reduction: p = combination (expanded) + remainder, and no monomial
  /// of remainder is a pivot.
  Reduced reduce(Polynomial p) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t zero_rows() const { return zero_rows_; }
  bool tracking() const { return track_; }

 private:
  struct Row {
    Polynomial poly;
    Polynomial combination;
  };
  bool track_;
  std::map<Monomial, Row, MonomialLess> rows_;
  std::size_t zero_rows_ = 0;
};

Echelon row_reduce(const GeneratorSet& g, bool track);

/// The elements of P: base right-hand sides, then aux right-hand sides.
std::vector<const Polynomial*> targets(const ExtendedSystem& sys);

struct VerifyOutcome {
  bool success = false;
  /// One quadratic form per element of P, over generator symbols.
  std::vector<Polynomial> forms;
  /// Nonzero reduced elements of P.
  std::vector<Polynomial> remainders;
};

/// Module-2 check. With `forms` false a success carries no quadratic forms,
/// which skips combination bookkeeping.
VerifyOutcome verify(const ExtendedSystem& sys, int k, bool forms = true);
VerifyOutcome verify(const ExtendedSystem& root, std::span<const Monomial> W, int k,
                     bool forms = true);

/// Expands a form over generator symbols back into the lifted ring.
Polynomial expand_form(const ExtendedSystem& sys, const Polynomial& form);

/// Soundness check: every form expands to its element of P, has degree at
/// most 2, and respects the derivative budgets at order k.
bool forms_are_sound(const ExtendedSystem& sys, int k, std::span<const Polynomial> forms);

/// "name_t = form" lines for a successful verification.
std::vector<std::string> render_quadratic_system(const ExtendedSystem& sys,
                                                 std::span<const Polynomial> forms);

}  // namespace pdequad
