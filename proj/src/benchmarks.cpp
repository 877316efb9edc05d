#include "pdequad/benchmarks.hpp"

#include <algorithm>
#include <cstdio>

#include "pdequad/parser.hpp"
#include "pdequad/verifier.hpp"

namespace pdequad {

namespace {

std::string reaction_source(int d) {
  static const char* primes[] = {"13", "17", "19", "23", "29", "31"};
  std::string params =
      "param eps = 2\nparam beta = 3\nparam theta = 5\nparam B = 7\nparam D = 11\n";
  std::string f;
  for (int i = 0; i <= d; ++i) {
    params += "param c" + std::to_string(i) + " = " + primes[i] + "\n";
    if (i > 0) f += " + ";
    f += "c" + std::to_string(i);
    if (i == 1) f += "*v";
    if (i > 1) f += "*v^" + std::to_string(i);
  }
  return "# Taylor-approximated tubular reactor, degree " + std::to_string(d) + "\n" + params +
         "u_t = eps*u_xx - u_x - D*u*(" + f + ")\n" +
         "v_t = eps*v_xx - v_x - beta*(v - theta) + B*D*u*(" + f + ")\n";
}

std::vector<BenchmarkCase> make_cases() {
  std::vector<BenchmarkCase> c;
  c.push_back({"solar-wind", "Solar wind model",
               "# HUX model with phi as x and r as t\nparam OM = 2\nu_t = OM*u_x/u\n", 1,
               {"1/u"}, false, 1});
  c.push_back({"allen-cahn", "Allen-Cahn equation", "u_t = u_xx + u - u^3\n", 1, {"u^2"}, false,
               3});
  c.push_back({"schlogl", "Schlogl model",
               "param k = 3\nu_t = u_xx - k*(u - 1/2)*(u - 1)*(u - 3/2)\n", 1, {"u^2"}, false, 3});
  c.push_back({"kdv", "Modified KdV", "param a = 2\nu_t = a*u^2*u_x - u_xxx\n", 1, {"u^2"},
               false, 4});
  c.push_back({"euler", "Euler equations",
               "param gamma = 3\n"
               "rho_t = -u*rho_x - rho*u_x\n"
               "u_t = -u_x*u - p_x/rho\n"
               "p_t = -gamma*u_x*p - u*p_x\n",
               1, {"1/rho"}, false, 1});
  c.push_back({"fhn", "FHN system",
               "param eps = 1/50\nparam b = 1/2\nparam gamma = 2\nparam c = 1/20\n"
               "v_t = eps*v_xx + (1/eps)*v*(v - 0.1)*(1 - v) - (1/eps)*u + (1/eps)*c\n"
               "u_t = b*v - gamma*u + c\n",
               1, {"v^2"}, false, 3});
  c.push_back({"brusselator", "Brusselator system",
               "param d1 = 2\nparam d2 = 3\nparam lambda = 5\nparam a = 7\nparam b = 11\n"
               "u_t = d1*u_x + lambda*(1 - (b + 1)*u + b*u^2*v)\n"
               "v_t = d2*v_x + lambda*a^2*(u - u^2*v)\n",
               2, {"u^2", "u*v"}, false, 8});
  c.push_back({"heat", "Nonlinear heat equation (p = 6)", "u_t = u_xx + u^6\n", 3,
               {"u^2", "u^4", "u^5"}, false, 27});
  c.push_back({"schnakenberg", "Schnakenberg equations",
               "param Du = 2\nparam Duv = 3\nparam Dv = 5\nparam Dvu = 7\n"
               "param k1 = 11\nparam a1 = 13\nparam k2 = 17\nparam k3 = 19\n"
               "param k4 = 23\nparam b1 = 29\n"
               "u_t = Du*u_xx + Duv*v_xx + k1*a1 - k2*u + k3*u^2*v\n"
               "v_t = Dv*v_xx + Dvu*u_xx + k4*b1 - k3*u^2*v\n",
               2, {"u*v", "u^2"}, false, 8});
  c.push_back({"dym", "Dym equation", "u_t = u^3*u_xxx\n", 2, {"u^3", "u_x^2*u"}, false, 21});
  c.push_back({"reaction3", "Polynomial reaction (d = 3)", reaction_source(3), 4,
               {"u*v", "v^2", "v^2*u", "v^3"}, false, 69});
  c.push_back({"reaction4", "Polynomial reaction (d = 4)", reaction_source(4), 5,
               {"u*v", "v^2", "v^2*u", "v^4", "v^3*u"}, true, 305});
  c.push_back({"arrhenius", "Arrhenius-type reaction",
               "# tubular reactor with y = exp(gamma - gamma/v)\n"
               "param eps = 2\nparam beta = 3\nparam theta = 5\nparam B = 7\nparam D = 11\n"
               "param gamma = 13\n"
               "u_t = eps*u_xx - u_x - D*u*y\n"
               "v_t = eps*v_xx - v_x - beta*(v - theta) + B*D*u*y\n"
               "y_t = gamma/v^2*y*(eps*v_xx - v_x - beta*(v - theta) + B*D*u*y)\n"
               "y_x = gamma/v^2*y*v_x\n",
               7, {"1/v", "1/v^2", "u*v", "u*y/v", "u*y/v^2", "y/v", "y/v^2"}, true, 491});
  c.push_back({"reaction5", "Polynomial reaction (d = 5)", reaction_source(5), 6,
               {"u*v", "v^2", "v^3", "v^3*u", "v^4*u", "v^5"}, true, 2107});
  return c;
}

bool is_bare_inverse(const ExtendedSystem& root, const Monomial& m) {
  return m.is_variable() && m.factors()[0].var.is_aux() &&
         m.factors()[0].var.index() < static_cast<int>(root.num_inverse());
}

}  // namespace

const std::vector<BenchmarkCase>& benchmark_cases() {
  static const std::vector<BenchmarkCase> cases = make_cases();
  return cases;
}

const BenchmarkCase* find_benchmark(std::string_view name) {
  for (const auto& c : benchmark_cases()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ExtendedSystem benchmark_system(const BenchmarkCase& c) {
  return polynomialize(parse_source(c.source).system);
}

std::vector<Monomial> aux_monomials(const ExtendedSystem& root,
                                    const std::vector<std::string>& exprs) {
  SymbolResolver resolve = resolver_for(root);
  std::vector<Monomial> out;
  for (const auto& e : exprs) {
    RationalFunction r = parse_expression(e, resolve);
    const Polynomial& num = r.numerator();
    if (num.size() != 1) throw std::invalid_argument("aux '" + e + "' is not a monomial");
    Monomial m = num.terms().begin()->first;
    if (!r.is_polynomial()) {
      FactoredDenominator fd = factor_denominator(r.denominator());
      for (const auto& [f, mult] : fd.factors) {
        bool matched = false;
        for (std::size_t i = 0; i < root.num_inverse(); ++i) {
          if (root.auxes()[i].factor == f) {
            m = m * Monomial(JetVariable::aux(static_cast<int>(i)), mult);
            matched = true;
            break;
          }
        }
        if (!matched) throw std::invalid_argument("aux '" + e + "' uses an unknown denominator");
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<SuiteRow> run_suite(const std::string& filter, const SearchConfig& cfg,
                                bool include_heavy) {
  std::vector<SuiteRow> rows;
  for (const auto& c : benchmark_cases()) {
    if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
    if (c.heavy && !include_heavy) continue;
    ExtendedSystem root = benchmark_system(c);
    SuiteRow row;
    row.name = c.name;
    row.expected_order = c.expected_order;
    row.result = search(root, cfg);
    row.nodes = row.result.stats.nodes;
    row.wall_ms = row.result.stats.wall_ms;
    if (row.result.found()) {
      row.found_order = row.result.order();
      row.sound = forms_are_sound(*row.result.system, row.result.diff_order, row.result.forms);
    }
    row.pass = row.result.found() && row.found_order <= row.expected_order && row.sound;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table1Check> verify_table1_sets() {
  std::vector<Table1Check> out;
  for (const auto& c : benchmark_cases()) {
    Table1Check check;
    check.name = c.name;
    ExtendedSystem root = benchmark_system(c);
    check.k = 3 * root.order_h();
    std::vector<Monomial> all = aux_monomials(root, c.expected_aux);
    std::vector<Monomial> monomials;
    std::size_t inverses = 0;
    for (const auto& m : all) {
      if (is_bare_inverse(root, m)) {
        ++inverses;
      } else {
        monomials.push_back(m);
      }
    }
    check.order = static_cast<int>(root.num_inverse() + monomials.size());
    if (inverses != root.num_inverse()) {
      check.detail = "published set does not list every inverse factor";
    } else if (check.order != c.expected_order) {
      check.detail = "published set size differs from the published order";
    } else {
      ExtendedSystem sys = root.extend(monomials);
      VerifyOutcome v = verify(sys, check.k);
      check.verified = v.success && forms_are_sound(sys, check.k, v.forms);
      if (!v.success) {
        check.detail = std::to_string(v.remainders.size()) + " nonzero remainders";
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::string format_suite(const std::vector<SuiteRow>& rows) {
  std::string out = "name            order  expected  nodes     wall_ms  status\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-15s %5d  %8d  %5zu  %10.1f  %s\n", r.name.c_str(),
                  r.found_order, r.expected_order, r.nodes, r.wall_ms, r.pass ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace pdequad
