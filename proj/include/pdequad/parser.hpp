#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "pdequad/rational_lift.hpp"

namespace pdequad {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line;
  int column;
  std::string message;
};

struct ParsedSource {
  RationalSystem system;
  std::map<std::string, Rational> params;
};

/// Parses the PDE DSL:
///
///   # comment
///   param a = 3/2
///   u_t = a*u^2*u_x - u_xxx
///
/// Every state used in an expression needs its own `_t` line. A line
/// `y_x = expr` ties the x-derivative of state y to other jets. Errors carry
/// 1-based line and column numbers.
ParsedSource parse_source(std::string_view text);

/// Resolves a bare identifier (no derivative suffix) to a symbol at order 0
/// or to a constant.
using SymbolResolver =
    std::function<std::optional<std::variant<JetVariable, Rational>>(std::string_view name)>;

/// Parses one expression; `name_x...x` differentiates the resolved symbol.
RationalFunction parse_expression(std::string_view text, const SymbolResolver& resolve);

/// Resolver for the names produced by ExtendedSystem::names().
SymbolResolver resolver_for(const ExtendedSystem& sys);

/// `(num)/(den)`, or the plain polynomial when the denominator is 1.
std::string to_string(const RationalFunction& r, const SymbolNames& names);

}  // namespace pdequad
