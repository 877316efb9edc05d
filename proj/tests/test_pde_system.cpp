#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("time derivative of a monomial") {
  ExtendedSystem sys = lifted("u_t = u_xx\n");
  CHECK(sys.time_derivative(Monomial(U(), 2)) == 2 * u() * u(2));
  CHECK(sys.time_derivative(Monomial(U(1)) * Monomial(U())) == u(3) * u() + u(1) * u(2));
  CHECK(time_derivative_monomial(Monomial(U(1), 2), sys) == 2 * u(1) * u(3));
}

TEST_CASE("time derivative of 1/v^2") {
  ExtendedSystem sys = lifted("v_t = v_xx + 1/v\n");
  Monomial q2(JetVariable::aux(0), 2);
  CHECK(sys.time_derivative(q2) == P(sys, "-2*q1^3*v_xx - 2*q1^4"));
  CHECK(time_derivative_inverse(0, sys) == P(sys, "-q1^2*v_xx - q1^3"));
}

TEST_CASE("x-derivative in the lifted ring") {
  ExtendedSystem sys = lifted("u_t = u_x/u\n");
  CHECK(sys.diff_x(P(sys, "q1")) == P(sys, "-q1^2*u_x"));
  CHECK(sys.expansion(M(sys, "q1^2"), 1) == P(sys, "-2*q1^3*u_x"));
  CHECK(sys.order_h() == 1);
}

TEST_CASE("extend keeps the original system and assigns ids in order") {
  ExtendedSystem root = lifted("u_t = u^2*u_xxx\n");
  std::vector<Monomial> w1 = {Monomial(U(), 2)};
  ExtendedSystem a = root.extend(w1);
  std::vector<Monomial> w2 = {Monomial(U(1), 2)};
  ExtendedSystem b = a.extend(w2);
  CHECK(root.auxes().empty());
  CHECK(a.auxes().size() == 1);
  REQUIRE(b.auxes().size() == 2);
  CHECK(b.auxes()[1].monomial == Monomial(U(1), 2));
  CHECK(b.auxes()[1].c == 1);
  CHECK(b.aux_name(1) == "w2");
  CHECK(b.aux_rhs()[0] == a.aux_rhs()[0]);
  CHECK(b.is_registered(Monomial(U(), 2)));
  CHECK(root == lifted("u_t = u^2*u_xxx\n"));
  CHECK_FALSE(root == a);
}

TEST_CASE("extend rejects duplicates and trivial definitions") {
  ExtendedSystem root = lifted("u_t = u^3\n");
  std::vector<Monomial> w = {Monomial(U(), 2)};
  ExtendedSystem a = root.extend(w);
  CHECK_THROWS_AS(a.extend(w), DuplicateAuxError);
  std::vector<Monomial> twice = {Monomial(U(), 3), Monomial(U(), 3)};
  CHECK_THROWS_AS(root.extend(twice), DuplicateAuxError);
  std::vector<Monomial> bare = {Monomial(U())};
  CHECK_THROWS_AS(root.extend(bare), std::invalid_argument);
  std::vector<Monomial> one = {Monomial()};
  CHECK_THROWS_AS(root.extend(one), std::invalid_argument);
}

TEST_CASE("x-relations") {
  ExtendedSystem sys = lifted("u_t = u_xx\ny_t = y*u_xx\ny_x = y*u_x\n");
  CHECK(sys.diff_x(P(sys, "y")) == P(sys, "y*u_x"));
  CHECK(sys.expansion(Monomial(V()), 2) == P(sys, "y*u_x^2 + y*u_xx"));

  ExtendedSystem with_jets = lifted("u_t = u_xx + y_x\ny_t = y*(u_xx + y_x)\ny_x = y*u_x\n");
  CHECK(with_jets.base().rhs(0) == P(with_jets, "u_xx + y*u_x"));

  CHECK_THROWS_AS(lifted("u_t = u_xx\ny_t = y\ny_x = u\n"), std::invalid_argument);
  CHECK_THROWS_AS(lifted("u_t = u_xx\ny_t = y*u_xx\ny_x = y_x\n"), ParseError);
}
