#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library's algorithms; they share only the data types.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pdvass/common.hpp"
#include "pdvass/model.hpp"

namespace oracle {

using pdvass::Int;
using pdvass::Vec;

/// SplitMix64. Small, seedable, and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// Uniform in [lo, hi].
  Int range(Int lo, Int hi) { return lo + static_cast<Int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

/// All of N^d with max-norm <= k, in lexicographic order.
std::vector<Vec> box(std::size_t d, Int k);
/// All of N^d with 1-norm <= k.
std::vector<Vec> simplex(std::size_t d, Int k);

/// The congruence generated by `pairs`, restricted to the points of 1-norm
/// at most `bound`: two points are related when a chain of single rewrites
/// (in either direction) stays inside the bounded region. Underapproximates
/// the congruence; exact once the bound is large enough.
class RewriteClosure {
 public:
  RewriteClosure(const std::vector<std::pair<Vec, Vec>>& pairs, std::size_t d, Int bound);
  /// Both points must lie inside the region.
  bool related(const Vec& s, const Vec& t) const;
  std::size_t classes() const;

 private:
  std::size_t index(const Vec& v) const;
  std::size_t find(std::size_t i) const;

  std::size_t d_;
  Int bound_;
  std::vector<Vec> points_;
  mutable std::vector<std::size_t> parent_;
};

/// v is a sum of elements of gens (all non-negative and nonzero).
bool in_monoid(const std::vector<Vec>& gens, const Vec& v);

/// base + sum of lambda_i * periods_i with every lambda_i <= k.
bool linear_member_enum(const Vec& base, const std::vector<Vec>& periods, const Vec& v, Int k);

/// All z >= 0 with max-norm <= k and A z = b.
std::vector<Vec> dio_solutions(const std::vector<Vec>& rows, std::size_t cols, const Vec& b, Int k);

// ---------------------------------------------------------------------------
// Weighted graphs.

struct Arc {
  std::size_t from;
  std::size_t to;
  Int weight;
};

/// Summary of the best (min, weight) over u->v paths; `omega` marks an
/// unbounded weight at the best min.
struct DpValue {
  bool reachable = false;
  Int a = 0;
  Int b = 0;
  bool omega = false;

  friend bool operator==(const DpValue&, const DpValue&) = default;
};

struct DpRow {
  std::vector<DpValue> gamma;
  std::optional<Int> delta;  // best min of a positive-weight cycle at u
};

/// Explicit search over (node, min, weight) from (u, 0, 0). Minima below
/// `floor` are dropped; a weight above `clamp` becomes omega and keeps its
/// min from then on.
DpRow dp_summaries(std::size_t nodes, const std::vector<Arc>& arcs, std::size_t u, Int floor = -25,
                   Int clamp = 16);

/// Every simple cycle as a node sequence starting at its least node.
std::vector<std::vector<std::size_t>> simple_cycles(std::size_t nodes, const std::vector<Arc>& arcs);
/// Largest weight of an arc from -> to, if any.
std::optional<Int> best_arc(const std::vector<Arc>& arcs, std::size_t from, std::size_t to);

/// Pareto-maximal (min, weight) pairs of u->v paths with at most maxLength
/// edges, sorted by decreasing min.
std::vector<std::pair<Int, Int>> path_frontier(std::size_t nodes, const std::vector<Arc>& arcs, std::size_t u,
                                               std::size_t v, std::size_t maxLength);

// ---------------------------------------------------------------------------
// One-counter machines.

/// (min, weight) pairs of empty-stack Z-runs p -> q of a one-counter machine,
/// found by search with |weight| <= weightMax and stack height <= stackMax.
std::set<std::pair<Int, Int>> run_summaries(const pdvass::model::Machine& m, pdvass::model::StateId p,
                                            pdvass::model::StateId q, Int weightMax, std::size_t stackMax);

}  // namespace oracle
