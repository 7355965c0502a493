#pragma once

// Groebner bases of pure-difference binomial ideals (x^u - x^v). A binomial
// is kept as a rewrite rule lead -> trail; since leading coefficients are
// always +-1, S-pairs and reductions never leave the binomial form.

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "pdvass/common.hpp"

namespace pdvass::binomial {

using Monomial = Vec;
using Pair = std::pair<Vec, Vec>;

enum class OrderKind { Lex, GradedLex, Block };

/// Admissible monomial order. Variables are ranked by `priority` (first =
/// largest); an empty list means 0 > 1 > ... . Block orders compare graded-lex
/// on the first `blockSize` variables of the ranking, then graded-lex on the
/// rest, which eliminates that block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedLex;
  std::vector<std::size_t> priority;
  std::size_t blockSize = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, {}, 0}; }
  static MonomialOrder graded_lex() { return {OrderKind::GradedLex, {}, 0}; }
  /// Block order eliminating `eliminated` among n variables.
  static MonomialOrder eliminating(const std::vector<std::size_t>& eliminated, std::size_t n);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
};

struct Binomial {
  Monomial lead;
  Monomial trail;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// x^u - x^v oriented by `order`; nullopt when u == v (the zero binomial).
std::optional<Binomial> orient(const Monomial& u, const Monomial& v, const MonomialOrder& order);

class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t arity, MonomialOrder order, std::vector<Binomial> elements);

  std::size_t arity() const { return arity_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }

  Monomial normal_form(Monomial m) const;
  /// Normal form of x^u - x^v: nullopt when it reduces to zero.
  std::optional<Binomial> normal_form(const Monomial& u, const Monomial& v) const;
  bool reduces_to_zero(const Monomial& u, const Monomial& v) const { return normal_form(u) == normal_form(v); }
  /// Every S-binomial reduces to zero.
  bool satisfies_buchberger_criterion() const;

 private:
  std::size_t arity_;
  MonomialOrder order_;
  std::vector<Binomial> elements_;
};

/// The reduced Groebner basis of the ideal generated by x^u - x^v, (u,v) in gens.
GroebnerBasis buchberger(const std::vector<Pair>& gens, std::size_t arity,
                         const MonomialOrder& order = MonomialOrder::graded_lex());

/// s ~ t in the congruence generated by `relations`.
bool congruence_member(const std::vector<Pair>& relations, std::size_t arity, const Vec& s, const Vec& t);

/// Pairs of a Groebner basis of I intersected with Z[keep] (still written
/// over all `arity` variables, with zeros outside `keep`).
std::vector<Pair> eliminate(const std::vector<Pair>& gens, std::size_t arity, const std::vector<std::size_t>& keep);

/// Generators of the ideal quotient I : x^b.
std::vector<Pair> quotient_by_monomial(const std::vector<Pair>& gens, std::size_t arity, const Monomial& b);

std::vector<Pair> to_pairs(const GroebnerBasis& g);

}  // namespace pdvass::binomial
