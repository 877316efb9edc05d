#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdequad/polynomial.hpp"

namespace pdequad {

enum class Heuristic { H1, H2, H3 };

struct HeuristicKind {
  Heuristic kind = Heuristic::H3;
  /// H3 key is weight_d * degree + weight_j * order.
  Rational weight_d = 1;
  Rational weight_j = 2;
};

std::string to_string(Heuristic h);
/// Accepts "h1", "h2", "h3" in any case.
std::optional<Heuristic> parse_heuristic(std::string_view text);

/// Candidate auxiliaries proposed by one decomposition: one or two
/// monomials, in descending lex order.
using DecompositionTuple = std::vector<Monomial>;

class AlreadyQuadratic : public std::runtime_error {
 public:
  AlreadyQuadratic() : std::runtime_error("no nonquadratic monomial") {}
};

/// Lowest-degree monomial of total degree > 2 across `polys`, ties broken by
/// lex_compare. Throws AlreadyQuadratic when there is none.
Monomial select_target(std::span<const Polynomial> polys);
std::optional<Monomial> find_target(std::span<const Polynomial> polys);

/// Unordered pairs (a, b), a <= b in lex order, with a * b == target.
std::vector<std::pair<Monomial, Monomial>> monomial_pairs(const Monomial& target);

/// The constant 1 or a bare variable; such factors never become auxiliaries.
bool is_trivial_factor(const Monomial& m);

/// Tuples of genuinely new factors for every pair of `monomial_pairs`.
/// Trivial factors and factors for which `existing` holds are dropped;
/// empty tuples are discarded and duplicates merged.
std::vector<DecompositionTuple> decompose(const Monomial& target,
                                          const std::function<bool(const Monomial&)>& existing);
std::vector<DecompositionTuple> decompose(const Monomial& target,
                                          std::span<const Monomial> registered = {});

/// Per-monomial heuristic key; H3 uses only the first slot.
std::array<Rational, 2> heuristic_key(const Monomial& m, const HeuristicKind& h);
/// Componentwise maximum of heuristic_key over the tuple.
std::array<Rational, 2> heuristic_key(const DecompositionTuple& t, const HeuristicKind& h);

/// Ascending by heuristic key; equal keys ordered by the tuples' monomials
/// compared smallest first.
std::vector<DecompositionTuple> sort_candidates(std::vector<DecompositionTuple> tuples,
                                                const HeuristicKind& h);

}  // namespace pdequad
