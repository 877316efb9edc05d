#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pdequad/groebner.hpp"

using namespace testing;

namespace {

Polynomial q(int i = 0, unsigned e = 1) { return Polynomial::variable(JetVariable::aux(i), e); }

}  // namespace

TEST_CASE("elimination order puts aux above base") {
  CHECK(elimination_compare(Monomial(JetVariable::aux(0)), Monomial(U(), 5)) > 0);
  CHECK(elimination_leading_monomial(q() * u() - 1) == (q() * u()).leading_monomial());
}

TEST_CASE("basis of <q(u+1) - 1>") {
  IdealBasis I({q() * (u() + 1) - 1});
  REQUIRE(I.groebner().size() == 1);
  CHECK(I.reduce(q() * u()) == 1 - q());
  CHECK(I.reduce(q() * (u() + 1)) == 1);
  CHECK(I.reduce(u().pow(2)) == u().pow(2));
}

TEST_CASE("q^5 u^2 reduces to q^3 modulo <q u - 1>") {
  IdealBasis I({q() * u() - 1});
  CHECK(I.reduce(q(0, 5) * u().pow(2)) == q(0, 3));
  CHECK(I.reduce(q(0, 2) * u().pow(5)) == u().pow(3));
}

TEST_CASE("two inverse factors") {
  std::vector<Polynomial> gens = {q(0) * u() - 1, q(1) * (u() + v()) - 1};
  auto g = buchberger(gens);
  CHECK(satisfies_buchberger_criterion(g));
  for (const auto& b : g) CHECK(b.leading_coefficient() == 1);
  IdealBasis I(gens);
  CHECK(I.reduce(q(0) * u() * q(1) * (u() + v())) == 1);
}

TEST_CASE("reduce is idempotent and a ring homomorphism") {
  IdealBasis I({q(0) * u() - 1, q(1) * (v() + 2) - 1});
  std::mt19937 rng(11);
  auto rnd = [&] {
    Polynomial p = random_poly(rng, 4, 2);
    return p * q(rng() % 2, 1 + rng() % 3) + random_poly(rng, 3, 2);
  };
  for (int i = 0; i < 200; ++i) {
    Polynomial a = rnd(), b = rnd();
    Polynomial ra = I.reduce(a), rb = I.reduce(b);
    CHECK(I.reduce(ra) == ra);
    CHECK(I.reduce(a + b) == ra + rb);
    CHECK(I.reduce(a * b) == I.reduce(ra * rb));
  }
}

TEST_CASE("normal form over an explicit basis") {
  auto g = buchberger({q() * u() - 1});
  CHECK(normal_form(q() * u().pow(2), g) == u());
  CHECK(IdealBasis().reduce(q() * u()) == q() * u());
}
