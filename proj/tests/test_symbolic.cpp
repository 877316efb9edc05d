#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("jet variables order base before aux and by derivative") {
  CHECK(U(0) < U(1));
  CHECK(U(5) < V(0));
  CHECK(V(3) < JetVariable::aux(0));
  CHECK(JetVariable::aux(0, 4) < JetVariable::aux(1));
  CHECK(U(2).differentiated(3) == U(5));
}

TEST_CASE("graded lex examples") {
  Monomial one, mu(U()), mux(U(1)), u2(U(), 2), u3(U(), 3);
  Monomial ux_u2 = Monomial(U(1)) * u2;
  Monomial ux2_u = Monomial(U(1), 2) * mu;
  CHECK(lex_compare(one, mu) < 0);
  CHECK(lex_compare(mu, mux) < 0);
  CHECK(lex_compare(mux, u2) < 0);
  CHECK(lex_compare(u3, ux_u2) < 0);
  CHECK(lex_compare(ux_u2, ux2_u) < 0);
  CHECK(lex_compare(u2, u2) == 0);
}

TEST_CASE("lex_compare is a total order") {
  std::mt19937 rng(7);
  std::vector<Monomial> ms;
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_poly(rng, 1, 2);
    if (!p.is_zero()) ms.push_back(p.terms().begin()->first);
  }
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      auto ab = lex_compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (lex_compare(b, a) > 0));
      if (ab < 0) CHECK(a.degree() <= b.degree());
      for (const auto& c : ms) {
        if (ab < 0 && lex_compare(b, c) < 0) CHECK(lex_compare(a, c) < 0);
      }
    }
  }
}

TEST_CASE("polynomial arithmetic and rendering") {
  ExtendedSystem sys = lifted("u_t = u_xx\n");
  Polynomial p = (u() + 1).pow(3);
  CHECK(str(sys, p) == "u^3 + 3*u^2 + 3*u + 1");
  CHECK(p.leading_monomial() == Monomial(U(), 3));
  CHECK((p - p).is_zero());
  CHECK(str(sys, u(3) * u().pow(3) - Rational(3, 2) * u(1)) == "u^3*u_xxx - 3/2*u_x");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("diff_x examples") {
  CHECK(diff_x(u(1) * u()) == u(2) * u() + u(1).pow(2));
  CHECK(diff_x(u().pow(3)) == 3 * u().pow(2) * u(1));
  CHECK(diff_x(Polynomial(7)).is_zero());
  CHECK(partial(u().pow(2) * u(1), U()) == 2 * u() * u(1));
}

TEST_CASE("Leibniz law on 1000 random pairs") {
  std::mt19937 rng(20241015);
  for (int i = 0; i < 1000; ++i) {
    Polynomial p = random_poly(rng, 4, 2);
    Polynomial q = random_poly(rng, 4, 2);
    REQUIRE(diff_x(p * q) == diff_x(p) * q + p * diff_x(q));
  }
}

TEST_CASE("diff_x agrees with a central finite difference") {
  // u(x) = exp(0.3x) + x^2, v(x) = cos(x); jets evaluated analytically.
  auto jet = [](JetVariable j, double x) {
    int h = j.order();
    if (j.index() == 0) {
      double poly = h == 0 ? x * x : h == 1 ? 2 * x : h == 2 ? 2 : 0;
      return std::pow(0.3, h) * std::exp(0.3 * x) + poly;
    }
    return std::cos(x + h * M_PI / 2);
  };
  auto eval = [&](const Polynomial& p, double x) {
    return p.evaluate([&](JetVariable j) { return Rational(jet(j, x)); }).get_d();
  };
  std::mt19937 rng(3);
  std::vector<Polynomial> cases = {u(1) * u(), u().pow(3) * u(2) - v(1) * u(1)};
  for (int i = 0; i < 20; ++i) cases.push_back(random_poly(rng, 3, 2));
  const double h = 1e-4;
  for (const auto& p : cases) {
    for (double x : {-0.7, 0.2, 1.1}) {
      double fd = (eval(p, x + h) - eval(p, x - h)) / (2 * h);
      double exact = eval(diff_x(p), x);
      CHECK(fd == doctest::Approx(exact).epsilon(1e-6).scale(1 + std::abs(exact)));
    }
  }
}

TEST_CASE("substitute and evaluate") {
  Polynomial p = u().pow(2) + u(1);
  Polynomial s = p.substitute([](JetVariable j) {
    return j == U() ? v() + 1 : Polynomial::variable(j);
  });
  CHECK(s == v().pow(2) + 2 * v() + 1 + u(1));
  CHECK(p.evaluate([](JetVariable j) { return Rational(j.order() + 2); }) == 7);
}
