#pragma once

// Path summaries on weighted finite graphs whose weakly connected components
// are strongly connected. For a path P, min(P) is the least prefix weight
// (the empty prefix counts, so min(P) <= 0) and w(P) its total weight.
// gamma(u, v) is the best (min, weight) pair over u->v paths, ordered by min
// first; delta(u) is the best min reachable before pumping a positive cycle.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pdvass/common.hpp"

namespace pdvass::graph {

/// Z extended with -infinity and omega (+infinity).
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, Omega };

  constexpr ExtInt() = default;
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf, 0); }
  static constexpr ExtInt omega() { return ExtInt(Kind::Omega, 0); }
  static constexpr ExtInt finite(Int v) { return ExtInt(Kind::Finite, v); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_omega() const { return kind_ == Kind::Omega; }
  /// Requires is_finite().
  Int value() const;

  /// "-INF", "OMEGA" or the decimal value.
  std::string to_string() const;

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr ExtInt(Kind k, Int v) : kind_(k), value_(v) {}
  Kind kind_ = Kind::NegInf;
  Int value_ = 0;
};

/// (a, b): best path minimum and best weight at that minimum.
struct SummaryValue {
  ExtInt a = ExtInt::neg_inf();
  ExtInt b = ExtInt::neg_inf();

  static SummaryValue none() { return {}; }
  static SummaryValue of(Int a, Int b) { return {ExtInt::finite(a), ExtInt::finite(b)}; }
  bool is_none() const { return a.is_neg_inf(); }

  friend bool operator==(const SummaryValue&, const SummaryValue&) = default;
};

/// (a, b) extended by an edge of weight c: (min(a, b + c), b + c).
SummaryValue extend(const SummaryValue& p, Int c);

struct Edge {
  std::size_t from;
  std::size_t to;
  Int weight;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t nodes) : nodes_(nodes) {}

  std::size_t add_node() { return nodes_++; }
  void add_edge(std::size_t from, std::size_t to, Int weight);
  std::size_t node_count() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Weakly connected component id per node (ids in order of least node).
  std::vector<std::size_t> components() const;
  bool components_strongly_connected() const;

 private:
  std::size_t nodes_ = 0;
  std::vector<Edge> edges_;
};

struct Stripped {
  WeightedGraph graph;
  std::vector<std::size_t> critical;  // in order of removal
};

/// Repeatedly finds a positive cycle, picks its critical node (the rotation
/// whose prefix sums never drop below zero) and deletes that node's outgoing
/// edges, until no positive cycle remains.
Stripped strip_positive_cycles(const WeightedGraph& g);

/// Pareto antichain of (min, weight) pairs, sorted by decreasing min.
using Frontier = std::vector<std::pair<Int, Int>>;

/// Frontier of every node over paths from `u`. Requires no positive cycle.
std::vector<Frontier> relax_frontiers(const WeightedGraph& g, std::size_t u);

struct SummaryRow {
  std::vector<SummaryValue> gamma;
  ExtInt delta = ExtInt::neg_inf();
};

/// Precomputes the stripped graph once so rows for many sources are cheap.
class SummaryEngine {
 public:
  /// Throws PreconditionError unless components are strongly connected.
  explicit SummaryEngine(const WeightedGraph& g);

  SummaryRow row(std::size_t u) const;
  const Stripped& stripped() const { return stripped_; }

 private:
  std::vector<std::size_t> component_;
  Stripped stripped_;
  std::vector<bool> is_critical_;
};

SummaryRow summaries(const WeightedGraph& g, std::size_t u);

/// "node<TAB>m,w m,w ..." per node with a non-empty frontier.
void write_frontiers(std::ostream& out, const std::vector<Frontier>& frontiers);

}  // namespace pdvass::graph
