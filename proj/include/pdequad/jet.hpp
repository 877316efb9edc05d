#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace pdequad {

/// A formal jet symbol: the `order`-th spatial derivative of either a base
/// state (`u_j`) or an auxiliary variable (`w_i`, `q_i`).
///
/// Variables are totally ordered: every Base variable precedes every Aux
/// variable, and within a kind the order is ascending (index, order). That
/// ordering is the variable order used by every monomial order in the library.
class JetVariable {
 public:
  enum class Kind : std::uint8_t { Base = 0, Aux = 1 };

  static constexpr int kMaxIndex = (1 << 15) - 1;
  static constexpr int kMaxOrder = (1 << 16) - 1;

  constexpr JetVariable() = default;

  static constexpr JetVariable base(int state, int order = 0) {
    return JetVariable(Kind::Base, state, order);
  }
  static constexpr JetVariable aux(int id, int order = 0) {
    return JetVariable(Kind::Aux, id, order);
  }

  constexpr Kind kind() const { return static_cast<Kind>(key_ >> 31); }
  constexpr bool is_base() const { return kind() == Kind::Base; }
  constexpr bool is_aux() const { return kind() == Kind::Aux; }
  constexpr int index() const { return static_cast<int>((key_ >> 16) & 0x7fffu); }
  constexpr int order() const { return static_cast<int>(key_ & 0xffffu); }

  constexpr JetVariable differentiated(int times = 1) const {
    return JetVariable(kind(), index(), order() + times);
  }
  constexpr JetVariable with_order(int order) const {
    return JetVariable(kind(), index(), order);
  }

  constexpr std::uint32_t key() const { return key_; }

  friend constexpr auto operator<=>(JetVariable, JetVariable) = default;

 private:
  constexpr JetVariable(Kind kind, int index, int order)
      : key_((static_cast<std::uint32_t>(kind) << 31) |
             (static_cast<std::uint32_t>(index & kMaxIndex) << 16) |
             static_cast<std::uint32_t>(order & kMaxOrder)) {}

  std::uint32_t key_ = 0;
};

}  // namespace pdequad

template <>
struct std::hash<pdequad::JetVariable> {
  std::size_t operator()(pdequad::JetVariable v) const noexcept {
    return std::hash<std::uint32_t>{}(v.key());
  }
};
