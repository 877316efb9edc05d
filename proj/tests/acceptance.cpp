#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "pdequad/benchmarks.hpp"
#include "pdequad/decomposer.hpp"
#include "pdequad/parser.hpp"
#include "pdequad/report.hpp"
#include "pdequad/verifier.hpp"

using namespace pdequad;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

ExtendedSystem lift(const char* src) { return polynomialize(parse_source(src).system); }

Polynomial poly(const ExtendedSystem& sys, const char* expr) {
  return sys.reduce(parse_expression(expr, resolver_for(sys)).numerator());
}

std::vector<Monomial> monos(const ExtendedSystem& sys, std::initializer_list<const char*> es) {
  std::vector<Monomial> out;
  for (const char* e : es) out.push_back(poly(sys, e).terms().begin()->first);
  return out;
}

Check golden() {
  Check c;
  {
    ExtendedSystem sys = lift("u_t = u_x + u^3\n");
    sys = sys.extend(monos(sys, {"u^2"}));
    VerifyOutcome r = verify(sys, 1);
    c.expect(r.success && r.forms[0] == poly(sys, "u_x + u*w1") &&
                 r.forms[1] == poly(sys, "2*u*u_x + 2*w1^2"),
             "(a) intro forms");
  }
  {
    ExtendedSystem sys = lift("u_t = u^2*u_x\n");
    sys = sys.extend(monos(sys, {"u^2"}));
    VerifyOutcome r = verify(sys, 1);
    c.expect(r.success && r.remainders.empty(), "(b) verification example");
  }
  {
    ExtendedSystem root = lift("u_t = u^2*u_xxx\n");
    VerifyOutcome r = verify(root.extend(monos(root, {"u^2"})), 9);
    c.expect(r.remainders.size() == 1 && r.remainders[0] == poly(root, "6*u*u_x^3"),
             "(c) remainder 6*u*u_x^3");
    QuadResult s = search(root, SearchConfig{});
    c.expect(s.found() && s.aux == monos(root, {"u^2", "u_x^2"}), "(c) shrink result");
  }
  {
    ExtendedSystem root = lift("u_t = u_xxx/u\n");
    c.expect(root.num_inverse() == 1 && root.auxes()[0].factor == poly(root, "u"),
             "(d) lift q = 1/u");
    c.expect(root.aux_rhs()[0] == poly(root, "-q1^3*u_xxx"), "(d) q_t");
    ExtendedSystem sys = root.extend(monos(root, {"q1^3"}));
    VerifyOutcome r = verify(sys, 3);
    c.expect(r.success && forms_are_sound(sys, 3, r.forms), "(d) q^3 verifies");
  }
  return c;
}

Check suite(bool heavy) {
  Check c;
  SearchConfig cfg;
  if (heavy) cfg.time_limit = std::chrono::minutes(30);
  std::vector<SuiteRow> rows;
  for (const auto& bc : benchmark_cases()) {
    if (bc.heavy != heavy) continue;
    auto r = run_suite(bc.name, cfg, heavy);
    for (auto& row : r) {
      if (row.name == bc.name) rows.push_back(std::move(row));
    }
  }
  std::fputs(format_suite(rows).c_str(), stdout);
  for (const auto& r : rows) {
    c.expect(r.pass, r.name + " found order " + std::to_string(r.found_order) + " (status " +
                         to_string(r.result.status) + ")");
  }
  return c;
}

Check table1() {
  Check c;
  for (const auto& t : verify_table1_sets()) c.expect(t.verified, t.name + ": " + t.detail);
  return c;
}

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), e(0, 2), n(1, 4);
  const JetVariable vars[] = {JetVariable::base(0), JetVariable::base(0, 1),
                              JetVariable::base(0, 2), JetVariable::base(1)};
  Polynomial p;
  for (int t = n(rng); t > 0; --t) {
    Monomial m;
    for (JetVariable x : vars) {
      if (int k = e(rng)) m = m * Monomial(x, static_cast<unsigned>(k));
    }
    p.add_term(m, Rational(coef(rng)));
  }
  return p;
}

Check properties() {
  Check c;
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Polynomial p = random_poly(rng), q = random_poly(rng);
    if (diff_x(p * q) != diff_x(p) * q + p * diff_x(q)) {
      c.expect(false, "(a) Leibniz law");
      break;
    }
  }

  const JetVariable vars[] = {JetVariable::base(0), JetVariable::base(0, 1), JetVariable::base(1)};
  for (unsigned a = 0; a <= 6; ++a) {
    for (unsigned b = 0; a + b <= 6; ++b) {
      for (unsigned d = 0; a + b + d <= 6; ++d) {
        unsigned e[3] = {a, b, d};
        Monomial target;
        for (int i = 0; i < 3; ++i) {
          if (e[i]) target = target * Monomial(vars[i], e[i]);
        }
        if (target.degree() < 2) continue;
        std::set<std::set<std::vector<unsigned>>> oracle, got;
        for (unsigned x = 0; x <= a; ++x) {
          for (unsigned y = 0; y <= b; ++y) {
            for (unsigned z = 0; z <= d; ++z) {
              std::set<std::vector<unsigned>> t;
              for (const auto& s : {std::vector<unsigned>{x, y, z},
                                    std::vector<unsigned>{a - x, b - y, d - z}}) {
                if (s[0] + s[1] + s[2] >= 2) t.insert(s);
              }
              if (!t.empty()) oracle.insert(t);
            }
          }
        }
        auto tuples = decompose(target);
        for (const auto& t : tuples) {
          std::set<std::vector<unsigned>> s;
          for (const auto& m : t) {
            s.insert({m.exponent(vars[0]), m.exponent(vars[1]), m.exponent(vars[2])});
          }
          got.insert(s);
        }
        c.expect(got == oracle, "(b) decompose oracle");
        c.expect(monomial_pairs(target).size() <= (1u << (target.degree() - 1)), "(b) 2^(d-1)");
      }
    }
  }

  for (const auto& bc : benchmark_cases()) {
    if (bc.heavy) continue;
    ExtendedSystem root = benchmark_system(bc);
    std::vector<Monomial> w;
    for (const auto& m : aux_monomials(root, bc.expected_aux)) {
      if (!(m.is_variable() && m.factors()[0].var.is_aux())) w.push_back(m);
    }
    ExtendedSystem sys = root.extend(w);
    int k = 3 * root.order_h();
    VerifyOutcome r = verify(sys, k);
    c.expect(r.success && forms_are_sound(sys, k, r.forms), "(c) soundness on " + bc.name);
  }

  for (const auto& bc : benchmark_cases()) {
    ExtendedSystem sys = benchmark_system(bc);
    for (std::size_t i = 0; i < sys.num_inverse(); ++i) {
      Polynomial q = Polynomial::variable(JetVariable::aux(static_cast<int>(i)));
      c.expect(sys.reduce(q * sys.auxes()[i].factor) == 1, "(d) q*f -> 1 on " + bc.name);
    }
    for (const auto& p : sys.aux_rhs()) c.expect(sys.reduce(p) == p, "(d) idempotence");
  }

  for (const char* name : {"dym", "schnakenberg", "solar-wind"}) {
    const BenchmarkCase& bc = *find_benchmark(name);
    std::string first;
    for (int i = 0; i < 3; ++i) {
      ExtendedSystem root = benchmark_system(bc);
      RunOptions opts;
      QuadResult r = search(root, opts.search);
      nlohmann::json j = make_report({bc.source, bc.name}, opts, root, r);
      j["stats"].erase("wall_ms");
      std::string s = j.dump();
      if (i == 0) first = s;
      c.expect(s == first, std::string("(e) determinism on ") + name);
    }
  }

  std::uniform_int_distribution<int> num(-50, 50), den(1, 11);
  for (const auto& bc : benchmark_cases()) {
    ParsedSource src = parse_source(bc.source);
    if (src.system.is_polynomial()) continue;
    ExtendedSystem sys = polynomialize(src.system);
    for (int n = 0; n < 200;) {
      std::map<JetVariable, Rational> pt;
      auto val = [&](JetVariable j) {
        auto it = pt.find(j);
        if (it == pt.end()) {
          Rational r(num(rng), den(rng));
          r.canonicalize();
          it = pt.emplace(j, r).first;
        }
        return it->second;
      };
      std::vector<Rational> qs;
      bool singular = false;
      for (std::size_t i = 0; i < sys.num_inverse(); ++i) {
        Rational f = sys.auxes()[i].factor.evaluate(val);
        singular = singular || f == 0;
        qs.push_back(f == 0 ? Rational(0) : Rational(1) / f);
      }
      if (singular) continue;
      for (std::size_t s = 0; s < sys.base().size(); ++s) {
        const RationalFunction& r = src.system.rhs[s];
        Rational expect = r.numerator().evaluate(val) / r.denominator().evaluate(val);
        Rational got = sys.base().rhs(static_cast<int>(s)).evaluate([&](JetVariable j) {
          return j.is_aux() ? qs[static_cast<std::size_t>(j.index())] : val(j);
        });
        c.expect(got == expect, "(f) semantic preservation on " + bc.name);
      }
      ++n;
    }
  }
  return c;
}

Check failure_mode() {
  Check c;
  ExtendedSystem root = lift("u_t = u^3\n");
  SearchConfig cfg;
  cfg.max_aux = 0;
  QuadResult r = search(root, cfg);
  c.expect(r.status == SearchStatus::Pr1Exhausted, "N=0 status " + to_string(r.status));
  QuadResult a = auto_search(root, cfg);
  c.expect(a.found() && a.max_aux == 1 && a.order() == 1, "auto_search at N=1");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  if (const char* env = std::getenv("PDEQUAD_HEAVY")) heavy = std::strcmp(env, "0") != 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;
  }

  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Check()> run;
    bool skip;
  };
  std::vector<Criterion> list = {
      {1, "golden worked examples", 5, golden, false},
      {2, "Table 1 search regression (11 models)", 120, [] { return suite(false); }, false},
      {3, "Table 1 heavy rows", 3 * 1800, [] { return suite(true); }, !heavy},
      {4, "Table 1 direct verification", 60, table1, false},
      {5, "property suites", 0, properties, false},
      {6, "failure-mode contract", 0, failure_mode, false},
  };

  int failures = 0;
  for (const auto& cr : list) {
    if (cr.skip) {
      std::printf("criterion %d: SKIP  %s (opt-in: --heavy or PDEQUAD_HEAVY=1)\n", cr.id, cr.title);
      std::fflush(stdout);
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_s > 0 && s > cr.budget_s) {
      c.expect(false, "over the " + std::to_string(static_cast<int>(cr.budget_s)) + " s budget");
    }
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", cr.id, c.ok ? "PASS" : "FAIL", cr.title, s,
                c.ok ? "" : ": ", c.why.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
