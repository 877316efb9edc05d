#include "doctest.h"
#include "helpers.hpp"
#include "pdequad/benchmarks.hpp"

using namespace testing;

TEST_CASE("fourteen cases in table order") {
  const auto& cases = benchmark_cases();
  REQUIRE(cases.size() == 14);
  std::vector<int> orders;
  std::vector<std::string> heavy;
  for (const auto& c : cases) {
    orders.push_back(c.expected_order);
    if (c.heavy) heavy.push_back(c.name);
  }
  CHECK(orders == std::vector<int>{1, 1, 1, 1, 1, 1, 2, 3, 2, 2, 4, 5, 7, 6});
  CHECK(heavy == std::vector<std::string>{"reaction4", "arrhenius", "reaction5"});
  CHECK(find_benchmark("dym")->reference_nodes == 21);
  CHECK(find_benchmark("nope") == nullptr);
}

TEST_CASE("benchmark systems have the published degree and order") {
  auto shape = [](const char* name) {
    ExtendedSystem sys = benchmark_system(*find_benchmark(name));
    unsigned d = 0;
    for (const auto& p : sys.base().rhs()) d = std::max(d, p.degree());
    return std::pair{d, sys.order_h()};
  };
  CHECK(shape("dym") == std::pair{4u, 3});
  CHECK(shape("kdv") == std::pair{3u, 3});
  CHECK(shape("heat") == std::pair{6u, 2});
  CHECK(shape("allen-cahn") == std::pair{3u, 2});
  CHECK(shape("reaction5").first == 6u);
}

TEST_CASE("rational benchmarks lift to the published inverses") {
  ExtendedSystem euler = benchmark_system(*find_benchmark("euler"));
  REQUIRE(euler.num_inverse() == 1);
  CHECK(euler.auxes()[0].factor == Polynomial::variable(JetVariable::base(0)));
  ExtendedSystem arr = benchmark_system(*find_benchmark("arrhenius"));
  REQUIRE(arr.num_inverse() == 1);
  CHECK(arr.auxes()[0].factor == Polynomial::variable(JetVariable::base(1)));
  CHECK(arr.x_relations().size() == 1);
}

TEST_CASE("benchmark ideals: q*f reduces to 1 and reduction is idempotent") {
  for (const auto& c : benchmark_cases()) {
    ExtendedSystem sys = benchmark_system(c);
    for (std::size_t i = 0; i < sys.num_inverse(); ++i) {
      Polynomial q = Polynomial::variable(JetVariable::aux(static_cast<int>(i)));
      CHECK(sys.reduce(q * sys.auxes()[i].factor) == 1);
    }
    for (const auto& p : sys.base().rhs()) CHECK(sys.reduce(p) == p);
    for (const auto& p : sys.aux_rhs()) CHECK(sys.reduce(p) == p);
  }
}

TEST_CASE("published aux expressions convert to monomials") {
  const BenchmarkCase& c = *find_benchmark("arrhenius");
  ExtendedSystem root = benchmark_system(c);
  auto m = aux_monomials(root, c.expected_aux);
  REQUIRE(m.size() == 7);
  CHECK(m[0] == Monomial(JetVariable::aux(0)));
  CHECK(m[4] == M(root, "u*y*q1^2"));
  CHECK_THROWS(aux_monomials(root, {"u + v"}));
  CHECK_THROWS(aux_monomials(root, {"1/u"}));
}

TEST_CASE("every published aux set verifies at k = 3h") {
  for (const auto& t : verify_table1_sets()) {
    CHECK_MESSAGE(t.verified, t.name << ": " << t.detail);
    CHECK(t.order == find_benchmark(t.name)->expected_order);
  }
}

TEST_CASE("suite reproduces published sets on small models") {
  SearchConfig cfg;
  auto rows = run_suite("", cfg);
  REQUIRE(rows.size() == 11);
  for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.name);
  auto aux_of = [&](const std::string& name) {
    for (const auto& r : rows) {
      if (r.name == name) return r.result.aux;
    }
    return std::vector<Monomial>{};
  };
  ExtendedSystem heat = benchmark_system(*find_benchmark("heat"));
  CHECK(aux_of("heat") == aux_monomials(heat, {"u^3", "u*u_x", "u^5"}));
  ExtendedSystem ac = benchmark_system(*find_benchmark("allen-cahn"));
  CHECK(aux_of("allen-cahn") == aux_monomials(ac, {"u^2"}));
  ExtendedSystem br = benchmark_system(*find_benchmark("brusselator"));
  auto got = aux_of("brusselator");
  std::sort(got.begin(), got.end(), MonomialLess{});
  CHECK(got == aux_monomials(br, {"u^2", "u*v"}));
  CHECK(format_suite(rows).find("allen-cahn") != std::string::npos);
}
