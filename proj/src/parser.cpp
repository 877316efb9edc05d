#include "pdequad/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace pdequad {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line(line),
      column(column),
      message(message) {}

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  int column;  // 1-based within the source line
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text, int line, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int col = col0 + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (digit(c) || (c == '.' && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      if (j < text.size() && ident_char(text[j])) {
        throw ParseError(line, col0 + static_cast<int>(j), "malformed number");
      }
      out.push_back({Tok::Number, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, text.substr(i, 1), col});
    ++i;
  }
  out.push_back({Tok::End, {}, col0 + static_cast<int>(text.size())});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> tokens, int line, const SymbolResolver& resolve)
      : toks_(std::move(tokens)), line_(line), resolve_(resolve) {}

  RationalFunction parse() {
    if (peek().kind == Tok::End) fail(peek(), "expected an expression");
    RationalFunction r = expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + std::string(peek().text) + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_, t.column, msg);
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      RationalFunction rhs = term();
      r = minus ? r - rhs : r + rhs;
    }
    return r;
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      RationalFunction rhs = unary();
      if (op.kind == Tok::Star) {
        r = r * rhs;
      } else {
        if (rhs.numerator().is_zero()) fail(op, "division by zero");
        r = r / rhs;
      }
    }
    return r;
  }

  RationalFunction unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& e = peek();
    if (e.kind == Tok::Minus) fail(e, "exponent must be a positive integer");
    if (e.kind != Tok::Number) fail(e, "expected an integer exponent");
    next();
    if (e.text.find('.') != std::string_view::npos) fail(e, "exponent must be a positive integer");
    unsigned long value = std::stoul(std::string(e.text));
    if (value == 0 || value > 1000) fail(e, "exponent must be a positive integer");
    if (peek().kind == Tok::Caret) fail(peek(), "chained exponents need parentheses");
    return base.pow(static_cast<unsigned>(value));
  }

  RationalFunction primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        return Polynomial(parse_rational(t.text));
      case Tok::Ident:
        return identifier(t);
      case Tok::LParen: {
        RationalFunction r = expr();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        next();
        return r;
      }
      case Tok::End:
        fail(t, "unexpected end of expression");
      default:
        fail(t, "unexpected '" + std::string(t.text) + "'");
    }
  }

  RationalFunction identifier(const Token& t) {
    std::string_view text = t.text;
    std::string_view name = text;
    int order = 0;
    if (auto us = text.find('_'); us != std::string_view::npos) {
      name = text.substr(0, us);
      std::string_view suffix = text.substr(us + 1);
      if (suffix == "t") fail(t, "time derivative '" + std::string(text) + "' in an expression");
      if (suffix.empty() || suffix.find_first_not_of('x') != std::string_view::npos) {
        fail(t, "malformed derivative '" + std::string(text) + "'");
      }
      order = static_cast<int>(suffix.size());
    }
    auto sym = resolve_ ? resolve_(name) : std::nullopt;
    if (!sym) {
      if (order > 0) fail(t, "derivative of unknown state '" + std::string(name) + "'");
      fail(t, "unknown state '" + std::string(name) + "'");
    }
    if (auto* c = std::get_if<Rational>(&*sym)) {
      if (order > 0) fail(t, "derivative of parameter '" + std::string(name) + "'");
      return Polynomial(*c);
    }
    JetVariable v = std::get<JetVariable>(*sym);
    return Polynomial::variable(v.with_order(v.order() + order));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  const SymbolResolver& resolve_;
};

std::string_view trim(std::string_view s, int* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += static_cast<int>(b);
  return s.substr(b, e - b);
}

bool valid_name(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct Equation {
  std::string state;
  std::string_view rhs;
  int line;
  int column;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const SymbolResolver& resolve) {
  return ExprParser(tokenize(text, 1, 1), 1, resolve).parse();
}

ParsedSource parse_source(std::string_view text) {
  ParsedSource out;
  std::vector<Equation> equations;
  std::vector<Equation> relations;
  std::map<std::string, int> state_index;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    int col = 1;
    std::string_view body = trim(line, &col);
    if (body.empty()) continue;

    auto eq = body.find('=');
    if (body.substr(0, 5) == "param" && body.size() > 5 &&
        std::isspace(static_cast<unsigned char>(body[5]))) {
      if (eq == std::string_view::npos) throw ParseError(line_no, col, "expected 'param NAME = value'");
      int name_col = col + 5;
      std::string_view name = trim(body.substr(5, eq - 5), &name_col);
      if (!valid_name(name)) throw ParseError(line_no, name_col, "invalid parameter name");
      std::string key(name);
      if (out.params.count(key)) throw ParseError(line_no, name_col, "duplicate parameter '" + key + "'");
      SymbolResolver consts = [&](std::string_view n) -> std::optional<std::variant<JetVariable, Rational>> {
        auto it = out.params.find(std::string(n));
        if (it == out.params.end()) return std::nullopt;
        return it->second;
      };
      int value_col = col + static_cast<int>(eq) + 1;
      std::string_view value = body.substr(eq + 1);
      RationalFunction v = ExprParser(tokenize(value, line_no, value_col), line_no, consts).parse();
      if (!v.numerator().is_constant() || !v.is_polynomial()) {
        throw ParseError(line_no, value_col, "parameter value must be a rational constant");
      }
      out.params[key] = v.numerator().constant();
      continue;
    }

    if (eq == std::string_view::npos) throw ParseError(line_no, col, "expected '<state>_t = <expression>'");
    int lhs_col = col;
    std::string_view lhs = trim(body.substr(0, eq), &lhs_col);
    std::string_view suffix = lhs.size() >= 3 ? lhs.substr(lhs.size() - 2) : "";
    if ((suffix != "_t" && suffix != "_x") || !valid_name(lhs.substr(0, lhs.size() - 2))) {
      throw ParseError(line_no, lhs_col, "left-hand side must be '<state>_t' or '<state>_x'");
    }
    std::string state(lhs.substr(0, lhs.size() - 2));
    if (suffix == "_x") {
      if (std::any_of(relations.begin(), relations.end(),
                      [&](const Equation& r) { return r.state == state; })) {
        throw ParseError(line_no, lhs_col, "duplicate relation for '" + state + "_x'");
      }
      relations.push_back({state, body.substr(eq + 1), line_no, col + static_cast<int>(eq) + 1});
      continue;
    }
    if (state_index.count(state)) {
      throw ParseError(line_no, lhs_col, "duplicate equation for '" + state + "'");
    }
    state_index.emplace(state, static_cast<int>(equations.size()));
    equations.push_back({state, body.substr(eq + 1), line_no, col + static_cast<int>(eq) + 1});
  }
  if (equations.empty()) throw ParseError(1, 1, "no equations");
  for (const auto& [name, v] : out.params) {
    if (state_index.count(name)) throw ParseError(1, 1, "'" + name + "' is both a state and a parameter");
  }

  SymbolResolver resolve = [&](std::string_view n) -> std::optional<std::variant<JetVariable, Rational>> {
    std::string key(n);
    if (auto it = state_index.find(key); it != state_index.end()) {
      return JetVariable::base(it->second);
    }
    if (auto it = out.params.find(key); it != out.params.end()) return it->second;
    return std::nullopt;
  };
  for (const auto& e : equations) {
    out.system.state_names.push_back(e.state);
    out.system.rhs.push_back(
        ExprParser(tokenize(e.rhs, e.line, e.column), e.line, resolve).parse());
  }
  for (const auto& r : relations) {
    auto it = state_index.find(r.state);
    if (it == state_index.end()) {
      throw ParseError(r.line, r.column, "relation for unknown state '" + r.state + "'");
    }
    RationalFunction value = ExprParser(tokenize(r.rhs, r.line, r.column), r.line, resolve).parse();
    for (const Polynomial* p : {&value.numerator(), &value.denominator()}) {
      for (JetVariable v : p->variables()) {
        if (v.order() > 0 && std::any_of(relations.begin(), relations.end(), [&](const Equation& o) {
              return state_index.at(o.state) == v.index();
            })) {
          throw ParseError(r.line, r.column, "a relation may not use derivatives of related states");
        }
      }
    }
    out.system.x_relations.emplace(it->second, std::move(value));
  }
  return out;
}

SymbolResolver resolver_for(const ExtendedSystem& sys) {
  SymbolNames names = sys.names();
  std::map<std::string, JetVariable> table;
  for (std::size_t j = 0; j < sys.base().size(); ++j) {
    table.emplace(names.name(JetVariable::base(static_cast<int>(j))),
                  JetVariable::base(static_cast<int>(j)));
  }
  for (std::size_t i = 0; i < sys.auxes().size(); ++i) {
    table.emplace(names.name(JetVariable::aux(static_cast<int>(i))),
                  JetVariable::aux(static_cast<int>(i)));
  }
  return [table](std::string_view n) -> std::optional<std::variant<JetVariable, Rational>> {
    auto it = table.find(std::string(n));
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

std::string to_string(const RationalFunction& r, const SymbolNames& names) {
  if (r.is_polynomial()) return to_string(r.numerator(), names);
  return "(" + to_string(r.numerator(), names) + ")/(" + to_string(r.denominator(), names) + ")";
}

}  // namespace pdequad
