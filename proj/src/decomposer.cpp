#include "pdequad/decomposer.hpp"

#include <algorithm>
#include <cctype>

namespace pdequad {

std::string to_string(Heuristic h) {
  switch (h) {
    case Heuristic::H1:
      return "h1";
    case Heuristic::H2:
      return "h2";
    case Heuristic::H3:
      return "h3";
  }
  return "h3";
}

std::optional<Heuristic> parse_heuristic(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "h1") return Heuristic::H1;
  if (lower == "h2") return Heuristic::H2;
  if (lower == "h3") return Heuristic::H3;
  return std::nullopt;
}

std::optional<Monomial> find_target(std::span<const Polynomial> polys) {
  const Monomial* best = nullptr;
  for (const auto& p : polys) {
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const Monomial& m = it->first;
      if (m.degree() <= 2) break;
      if (!best || lex_compare(m, *best) < 0) best = &m;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

Monomial select_target(std::span<const Polynomial> polys) {
  auto t = find_target(polys);
  if (!t) throw AlreadyQuadratic();
  return *t;
}

std::vector<std::pair<Monomial, Monomial>> monomial_pairs(const Monomial& target) {
  auto factors = target.factors();
  std::vector<unsigned> split(factors.size(), 0);
  std::vector<std::pair<Monomial, Monomial>> out;
  while (true) {
    Monomial a, b;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (split[i] > 0) a = a * Monomial(factors[i].var, split[i]);
      if (split[i] < factors[i].exp) b = b * Monomial(factors[i].var, factors[i].exp - split[i]);
    }
    if (lex_compare(a, b) <= 0) out.emplace_back(std::move(a), std::move(b));
    std::size_t i = 0;
    while (i < factors.size() && split[i] == factors[i].exp) split[i++] = 0;
    if (i == factors.size()) break;
    ++split[i];
  }
  return out;
}

bool is_trivial_factor(const Monomial& m) { return m.is_one() || m.is_variable(); }

std::vector<DecompositionTuple> decompose(const Monomial& target,
                                          const std::function<bool(const Monomial&)>& existing) {
  std::vector<DecompositionTuple> out;
  for (const auto& [a, b] : monomial_pairs(target)) {
    DecompositionTuple t;
    for (const Monomial* m : {&b, &a}) {
      if (is_trivial_factor(*m) || (existing && existing(*m))) continue;
      if (std::find(t.begin(), t.end(), *m) == t.end()) t.push_back(*m);
    }
    if (t.empty()) continue;
    std::sort(t.begin(), t.end(), [](const Monomial& x, const Monomial& y) {
      return lex_compare(x, y) > 0;
    });
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

std::vector<DecompositionTuple> decompose(const Monomial& target,
                                          std::span<const Monomial> registered) {
  return decompose(target, [registered](const Monomial& m) {
    return std::find(registered.begin(), registered.end(), m) != registered.end();
  });
}

std::array<Rational, 2> heuristic_key(const Monomial& m, const HeuristicKind& h) {
  Rational d(m.degree());
  Rational j(m.max_order());
  switch (h.kind) {
    case Heuristic::H1:
      return {j, d};
    case Heuristic::H2:
      return {d, j};
    case Heuristic::H3:
      return {h.weight_d * d + h.weight_j * j, Rational(0)};
  }
  return {};
}

std::array<Rational, 2> heuristic_key(const DecompositionTuple& t, const HeuristicKind& h) {
  std::array<Rational, 2> key{Rational(0), Rational(0)};
  for (const auto& m : t) {
    auto k = heuristic_key(m, h);
    key[0] = std::max(key[0], k[0]);
    key[1] = std::max(key[1], k[1]);
  }
  return key;
}

std::vector<DecompositionTuple> sort_candidates(std::vector<DecompositionTuple> tuples,
                                                const HeuristicKind& h) {
  struct Entry {
    std::array<Rational, 2> key;
    DecompositionTuple tuple;
  };
  std::vector<Entry> entries;
  entries.reserve(tuples.size());
  for (auto& t : tuples) entries.push_back({heuristic_key(t, h), std::move(t)});
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    // Tuples are stored descending, so compare from the back.
    return std::lexicographical_compare(
        a.tuple.rbegin(), a.tuple.rend(), b.tuple.rbegin(), b.tuple.rend(),
        [](const Monomial& x, const Monomial& y) { return lex_compare(x, y) < 0; });
  });
  std::vector<DecompositionTuple> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.tuple));
  return out;
}

}  // namespace pdequad
