#include "pdequad/rational.hpp"

#include <stdexcept>
#include <string>

namespace pdequad {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed decimal literal '" + s + "'");
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(mpz_class(whole + frac, 10), den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace pdequad
