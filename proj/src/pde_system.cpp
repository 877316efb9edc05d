#include "pdequad/pde_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace pdequad {

PdeSystem::PdeSystem(std::vector<std::string> state_names, std::vector<Polynomial> rhs)
    : names_(std::move(state_names)), rhs_(std::move(rhs)) {
  if (names_.size() != rhs_.size()) {
    throw std::invalid_argument("state count does not match right-hand side count");
  }
  for (const auto& p : rhs_) {
    for (JetVariable v : p.variables()) {
      if (v.is_base() && v.index() >= static_cast<int>(names_.size())) {
        throw std::invalid_argument("right-hand side refers to an unknown state");
      }
      if (v.is_base()) order_h_ = std::max(order_h_, v.order());
    }
  }
}

namespace {

struct ExpansionKey {
  Monomial def;
  int order;
  friend bool operator==(const ExpansionKey&, const ExpansionKey&) = default;
};

struct ExpansionKeyHash {
  std::size_t operator()(const ExpansionKey& k) const {
    return k.def.hash() * 31u + static_cast<std::size_t>(k.order);
  }
};

struct ProductKey {
  ExpansionKey a;
  ExpansionKey b;
  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const {
    ExpansionKeyHash h;
    return h(k.a) * 1000003u ^ h(k.b);
  }
};

template <class Map, class Key, class Compute>
const Polynomial& memo(std::mutex& mu, Map& map, const Key& key, Compute&& compute) {
  {
    std::lock_guard lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  Polynomial value = compute();
  std::lock_guard lock(mu);
  return map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

struct ExtendedSystem::Cache {
  IdealBasis ideal;
  std::vector<Polynomial> inverse_factors;
  std::map<int, Polynomial> x_relations;

  std::mutex mu;
  std::map<std::pair<int, int>, Polynomial> dx_rhs;
  std::unordered_map<ExpansionKey, Polynomial, ExpansionKeyHash> expansions;
  std::unordered_map<ProductKey, Polynomial, ProductKeyHash> products;
  std::unordered_map<Monomial, Polynomial, MonomialHash> time_derivs;
  std::map<int, Polynomial> inverse_dx;
  std::map<int, Polynomial> inverse_dt;
};

ExtendedSystem::ExtendedSystem() : ExtendedSystem(PdeSystem{}) {}

ExtendedSystem::ExtendedSystem(PdeSystem base) : ExtendedSystem(std::move(base), {}) {}

ExtendedSystem::ExtendedSystem(PdeSystem base, std::vector<Polynomial> inverse_factors,
                               std::map<int, Polynomial> x_relations)
    : cache_(std::make_shared<Cache>()) {
  std::vector<Polynomial> generators;
  for (std::size_t i = 0; i < inverse_factors.size(); ++i) {
    const Polynomial& f = inverse_factors[i];
    if (f.has_aux()) throw std::invalid_argument("inverse factor must range over Base variables");
    if (f.is_zero()) throw std::domain_error("inverse of the zero polynomial");
    AuxDefinition def;
    def.kind = AuxDefinition::Kind::Inverse;
    def.factor = f;
    def.c = f.max_order();
    auxes_.push_back(std::move(def));
    generators.push_back(Polynomial::variable(JetVariable::aux(static_cast<int>(i))) * f - 1);
  }
  num_inverse_ = inverse_factors.size();
  cache_->ideal = IdealBasis(std::move(generators));
  cache_->inverse_factors = std::move(inverse_factors);

  auto check_symbols = [&](const Polynomial& p) {
    for (JetVariable v : p.variables()) {
      if (v.is_aux() && (v.order() != 0 || v.index() >= static_cast<int>(num_inverse_))) {
        throw std::invalid_argument("right-hand side refers to an unknown auxiliary symbol");
      }
      if (v.is_base() && v.index() >= static_cast<int>(base.size())) {
        throw std::invalid_argument("x-relation refers to an unknown state");
      }
    }
  };
  for (auto& [j, r] : x_relations) {
    if (j < 0 || j >= static_cast<int>(base.size())) {
      throw std::invalid_argument("x-relation for an unknown state");
    }
    check_symbols(r);
    for (JetVariable v : r.variables()) {
      if (v.is_base() && v.order() > 0 && x_relations.count(v.index())) {
        throw std::invalid_argument("x-relation uses a derivative of a related state");
      }
    }
    r = reduce(r);
  }
  cache_->x_relations = std::move(x_relations);

  std::vector<Polynomial> rhs;
  for (const auto& p : base.rhs()) {
    check_symbols(p);
    rhs.push_back(resolve_relations(p));
  }
  base_ = PdeSystem(base.state_names(), std::move(rhs));
  for (const auto& [j, r] : cache_->x_relations) {
    Polynomial dt;
    for (const auto& [m, c] : r.terms()) {
      if (!m.is_one()) dt.add_scaled(time_derivative(m), c);
    }
    if (reduce(dt) != diff_x(base_.rhs(j))) {
      throw std::invalid_argument("x-relation for '" + base_.state_names()[j] +
                                  "' does not commute with its time derivative");
    }
  }
  for (std::size_t i = 0; i < num_inverse_; ++i) {
    aux_rhs_.push_back(inverse_time_derivative(static_cast<int>(i)));
  }
}

const IdealBasis& ExtendedSystem::ideal() const { return cache_->ideal; }

const std::map<int, Polynomial>& ExtendedSystem::x_relations() const {
  return cache_->x_relations;
}

Polynomial ExtendedSystem::resolve_relations(const Polynomial& p) const {
  if (cache_->x_relations.empty()) return reduce(p);
  return reduce(p.substitute([&](JetVariable v) {
    if (v.is_base() && v.order() > 0 && cache_->x_relations.count(v.index())) {
      return expansion(Monomial(JetVariable::base(v.index())), v.order());
    }
    return Polynomial::variable(v);
  }));
}

std::vector<Monomial> ExtendedSystem::monomial_auxes() const {
  std::vector<Monomial> out;
  for (const auto& a : auxes_) {
    if (!a.is_inverse()) out.push_back(a.monomial);
  }
  return out;
}

int ExtendedSystem::order_h() const {
  int h = base_.order_h();
  for (std::size_t i = 0; i < num_inverse_; ++i) h = std::max(h, auxes_[i].c);
  return h;
}

int ExtendedSystem::content_order(const Monomial& m) const {
  int c = 0;
  for (const auto& f : m.factors()) {
    if (f.var.is_base()) {
      c = std::max(c, f.var.order());
    } else {
      c = std::max(c, auxes_.at(static_cast<std::size_t>(f.var.index())).c + f.var.order());
    }
  }
  return c;
}

bool ExtendedSystem::is_registered(const Monomial& m) const {
  return std::any_of(auxes_.begin(), auxes_.end(),
                     [&](const AuxDefinition& a) { return !a.is_inverse() && a.monomial == m; });
}

ExtendedSystem ExtendedSystem::extend(std::span<const Monomial> new_auxes) const {
  ExtendedSystem out = *this;
  for (const Monomial& m : new_auxes) {
    if (m.is_one() || m.is_variable()) {
      throw std::invalid_argument("auxiliary definition must be a nonlinear monomial");
    }
    for (const auto& f : m.factors()) {
      if (f.var.is_aux() &&
          (f.var.order() != 0 || f.var.index() >= static_cast<int>(num_inverse_))) {
        throw std::invalid_argument("auxiliary definition may only use Base and inverse symbols");
      }
    }
    if (out.is_registered(m)) throw DuplicateAuxError("auxiliary already registered");
    AuxDefinition def;
    def.monomial = m;
    def.c = content_order(m);
    out.auxes_.push_back(std::move(def));
    out.aux_rhs_.push_back(time_derivative(m));
  }
  return out;
}

Polynomial ExtendedSystem::reduce(const Polynomial& p) const {
  return cache_->ideal.reduce(p);
}

Polynomial ExtendedSystem::diff_x(const Polynomial& p) const {
  auto rule = [this](JetVariable v) -> std::optional<Polynomial> {
    if (v.is_base()) {
      auto it = cache_->x_relations.find(v.index());
      if (it == cache_->x_relations.end()) return std::nullopt;
      if (v.order() != 0) throw std::logic_error("diff_x: derivative of a related state");
      return it->second;
    }
    if (v.order() != 0 || v.index() >= static_cast<int>(num_inverse_)) {
      throw std::logic_error("diff_x: formal auxiliary symbol in a lifted-ring polynomial");
    }
    int id = v.index();
    return memo(cache_->mu, cache_->inverse_dx, id, [&] {
      const Polynomial& f = cache_->inverse_factors[static_cast<std::size_t>(id)];
      Polynomial q2 = Polynomial::variable(JetVariable::aux(id), 2);
      return reduce(-(q2 * pdequad::diff_x(f)));
    });
  };
  return reduce(pdequad::diff_x(p, rule));
}

const Polynomial& ExtendedSystem::dx_rhs(int state, int h) const {
  if (h == 0) return base_.rhs(state);
  return memo(cache_->mu, cache_->dx_rhs, std::pair{state, h},
              [&] { return diff_x(dx_rhs(state, h - 1)); });
}

const Polynomial& ExtendedSystem::expansion(const Monomial& def, int m) const {
  return memo(cache_->mu, cache_->expansions, ExpansionKey{def, m}, [&] {
    return m == 0 ? reduce(Polynomial(def)) : diff_x(expansion(def, m - 1));
  });
}

const Polynomial& ExtendedSystem::product(const Monomial& a, int ma, const Monomial& b,
                                           int mb) const {
  ProductKey key{{a, ma}, {b, mb}};
  if (ExpansionKeyHash{}(key.b) < ExpansionKeyHash{}(key.a)) std::swap(key.a, key.b);
  return memo(cache_->mu, cache_->products, key,
              [&] { return reduce(expansion(a, ma) * expansion(b, mb)); });
}

const Polynomial& ExtendedSystem::time_derivative(const Monomial& w) const {
  return memo(cache_->mu, cache_->time_derivs, w, [&] {
    Polynomial out;
    for (const auto& f : w.factors()) {
      Monomial rest = w.without_one(f.var);
      const Polynomial& dv = f.var.is_base() ? dx_rhs(f.var.index(), f.var.order())
                                             : inverse_time_derivative(f.var.index());
      out.add_scaled(dv, Rational(f.exp), rest);
    }
    return reduce(out);
  });
}

const Polynomial& ExtendedSystem::inverse_time_derivative(int id) const {
  if (id < 0 || id >= static_cast<int>(num_inverse_)) {
    throw std::out_of_range("not an inverse auxiliary");
  }
  return memo(cache_->mu, cache_->inverse_dt, id, [&] {
    Polynomial ft;
    for (const auto& [m, c] : cache_->inverse_factors[static_cast<std::size_t>(id)].terms()) {
      if (!m.is_one()) ft.add_scaled(time_derivative(m), c);
    }
    Polynomial q2 = Polynomial::variable(JetVariable::aux(id), 2);
    return reduce(-(q2 * ft));
  });
}

std::string ExtendedSystem::aux_name(int id) const { return names().aux_name(id); }

SymbolNames ExtendedSystem::names() const {
  std::size_t r = num_inverse_;
  return SymbolNames{base_.state_names(), [r](int id) {
                       auto idx = static_cast<std::size_t>(id);
                       if (idx < r) return "q" + std::to_string(id + 1);
                       return "w" + std::to_string(id - static_cast<int>(r) + 1);
                     }};
}

bool operator==(const ExtendedSystem& a, const ExtendedSystem& b) {
  return a.base_ == b.base_ && a.auxes_ == b.auxes_ && a.aux_rhs_ == b.aux_rhs_ &&
         a.ideal().generators() == b.ideal().generators() &&
         a.x_relations() == b.x_relations();
}

Polynomial time_derivative_monomial(const Monomial& w, const ExtendedSystem& sys) {
  return sys.time_derivative(w);
}

Polynomial time_derivative_inverse(int id, const ExtendedSystem& sys) {
  return sys.inverse_time_derivative(id);
}

}  // namespace pdequad
