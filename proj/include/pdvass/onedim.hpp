#pragma once

// Decision procedures for one-counter bidirected PVASS: coverability by
// mutual saturation of the summaries gamma_k / delta_k over layered graphs,
// Z-reachability by coset summaries, and reachability as their combination.

#include <optional>
#include <ostream>
#include <vector>

#include "pdvass/graph_summary.hpp"
#include "pdvass/model.hpp"

namespace pdvass::onedim {

using graph::ExtInt;
using graph::SummaryValue;
using model::Machine;
using model::StateId;

struct SummaryTable {
  std::size_t states = 0;
  std::size_t level = 0;
  std::vector<SummaryValue> gamma;  // row-major, states x states
  std::vector<ExtInt> delta;

  const SummaryValue& at(StateId p, StateId q) const { return gamma[p * states + q]; }
  SummaryValue& at(StateId p, StateId q) { return gamma[p * states + q]; }

  /// Same values (the level is ignored).
  bool same_values(const SummaryTable& o) const { return gamma == o.gamma && delta == o.delta; }
};

/// Node numbering of the layered graph for n states and layers
/// sigma = 0 (bottom) .. |alphabet|.
struct LayerGraph {
  graph::WeightedGraph graph;
  std::size_t states = 0;
  std::size_t layers = 0;

  std::size_t base(StateId p, std::size_t sigma) const { return sigma * states + p; }
  std::size_t delta_gadget(StateId p, std::size_t sigma) const { return layers * states + sigma * states + p; }
  std::size_t gamma_gadget(StateId p, StateId q, std::size_t sigma) const {
    return 2 * layers * states + (sigma * states + p) * states + q;
  }
};

/// G_0 when prev is null, otherwise G_k from the level k-1 table. Internal
/// transitions appear as edges of the bottom layer at every level.
/// Requires a separated machine of dimension 1.
LayerGraph build_layer_graph(const Machine& m, const SummaryTable* prev);

struct SaturateOptions {
  std::size_t maxLevel = 1u << 16;
};

struct Saturation {
  /// history[k] is the level-k table; the last two entries agree.
  std::vector<SummaryTable> history;

  const SummaryTable& table() const { return history.back(); }
  /// The first k with table_k == table_{k-1}.
  std::size_t converged_level() const { return history.back().level; }
};

/// Throws PreconditionError unless m is bidirected, separated and 1-dimensional;
/// CapExceeded when no fixpoint appears within options.maxLevel levels.
Saturation saturate_summaries(const Machine& m, const SaturateOptions& options = {});

/// r + gZ (g > 0, 0 <= r < g), the singleton {r} (g == 0), or empty.
struct Coset {
  bool empty = true;
  Int offset = 0;
  Int modulus = 0;

  static Coset none() { return {}; }
  static Coset single(Int r) { return {false, r, 0}; }
  static Coset of(Int r, Int g);

  bool contains(Int x) const;
  std::string to_string() const;

  friend bool operator==(const Coset&, const Coset&) = default;
};

Coset coset_join(const Coset& a, const Coset& b);
Coset coset_add(const Coset& a, const Coset& b);

/// W(p, q) for all pairs: weights of empty-stack Z-paths. Requires m bidirected.
std::vector<Coset> zreach_cosets(const Machine& m);

/// Caches saturation and coset tables for repeated queries on one machine.
class OneDim {
 public:
  explicit OneDim(const Machine& m, const SaturateOptions& options = {});

  const Saturation& saturation() const { return saturation_; }
  bool cover(StateId p, StateId q) const;
  const Coset& weights(StateId p, StateId q) const { return cosets_[p * states_ + q]; }
  bool zreach(StateId p, StateId q) const { return weights(p, q).contains(0); }
  bool reach(StateId p, StateId q) const { return cover(p, q) && cover(q, p) && zreach(p, q); }
  /// Least level whose table already shows cover(p, q), if any.
  std::optional<std::size_t> first_cover_level(StateId p, StateId q) const;

 private:
  std::size_t states_;
  Saturation saturation_;
  std::vector<Coset> cosets_;
};

bool cover(const Machine& m, StateId p, StateId q);
bool zreach(const Machine& m, StateId p, StateId q);
bool reach1d(const Machine& m, StateId p, StateId q);

/// One line "level<TAB>p<TAB>q<TAB>a<TAB>b" per pair and level; delta rows use
/// q = "*" and b = "-".
void write_trace(std::ostream& out, const Machine& m, const Saturation& s);

}  // namespace pdvass::onedim
