#pragma once

// Linear sets base + periods* over N^k and finite unions of them, with the
// operations the congruence and saturation modules need. There is no
// complement or equality test; equivalence is always checked by membership.

#include <string>
#include <utility>
#include <vector>

#include "pdvass/common.hpp"

namespace pdvass::semilinear {

struct LinearSet {
  Vec base;
  std::vector<Vec> periods;  // nonzero, sorted, distinct

  /// Drops zero periods, sorts and deduplicates.
  void canonicalize();
  bool member(const Vec& v) const;

  friend bool operator==(const LinearSet&, const LinearSet&) = default;
  friend auto operator<=>(const LinearSet&, const LinearSet&) = default;
};

using Pair = std::pair<Vec, Vec>;

class SemilinearSet {
 public:
  explicit SemilinearSet(std::size_t arity = 0) : arity_(arity) {}
  SemilinearSet(std::size_t arity, std::vector<LinearSet> components);

  static SemilinearSet empty(std::size_t arity) { return SemilinearSet(arity); }
  static SemilinearSet singleton(const Vec& v);
  /// The identity relation on N^d, as a set over N^{2d}.
  static SemilinearSet diagonal(std::size_t d);

  std::size_t arity() const { return arity_; }
  const std::vector<LinearSet>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }

  bool member(const Vec& v) const;
  /// Relations over N^{2d}: member((s, t)).
  bool member(const Vec& s, const Vec& t) const;

  void add(LinearSet l);
  SemilinearSet united(const SemilinearSet& o) const;

  /// Removes periods generated by the others and components contained in
  /// another one (both by sufficient syntactic-plus-membership tests).
  SemilinearSet simplified() const;

  /// Total count of base and period vectors.
  std::size_t size() const;

  friend bool operator==(const SemilinearSet&, const SemilinearSet&) = default;

 private:
  std::size_t arity_;
  std::vector<LinearSet> components_;
};

/// Sufficient test for a being a subset of b: every component of a lies in
/// a single component of b.
bool included(const SemilinearSet& a, const SemilinearSet& b);

/// {v in S : v >= c}.
SemilinearSet intersect_upset(const SemilinearSet& s, const Vec& c);

/// Shifts every base by delta. With guard, a negative shifted base throws
/// PreconditionError.
SemilinearSet translate(const SemilinearSet& s, const Vec& delta, bool guard_non_negative = true);

/// {(x, z) : (x, y) in a and (y, z) in b} for relations over N^{2d}.
SemilinearSet compose(const SemilinearSet& a, const SemilinearSet& b);

/// {(x, z) : (x, y) in a, (y', z) in b, y >= floor, y' >= floor and
/// y - y' in the integer span of `lattice`}. With floor 0 and no lattice
/// vectors this is compose(a, b).
SemilinearSet compose_modulo(const SemilinearSet& a, const SemilinearSet& b, const Vec& floor,
                             const std::vector<Vec>& lattice);

/// Pairs split(b), split(b + p) for each component; the congruence they
/// generate contains the relation.
std::vector<Pair> to_congruence_basis(const SemilinearSet& s);

/// One component per line: "base | p1 ; p2".
std::string to_text(const SemilinearSet& s);
/// Inverse of to_text; arity is needed for the empty set.
SemilinearSet parse_text(const std::string& text, std::size_t arity);

}  // namespace pdvass::semilinear
