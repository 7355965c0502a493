#pragma once

// Bounded breadth-first search over configurations. Every answer is relative
// to the bounds: "exhausted" only means nothing was found inside them.

#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdvass/model.hpp"

namespace pdvass::explore {

enum class Mode { Nat, Int };

struct Bounds {
  Int counterMax = 32;
  std::size_t stackMax = 10;
  std::size_t nodeMax = 2'000'000;
  /// Int: counters may go negative, but |c| <= counterMax.
  Mode mode = Mode::Nat;
};

enum class Cmp { Any, Eq, Ge };

struct CounterGoal {
  Cmp cmp = Cmp::Any;
  Int value = 0;
};

/// Target predicate. An empty `counters` list accepts any counter values.
struct Target {
  std::optional<model::StateId> state;
  std::vector<CounterGoal> counters;
  bool emptyStack = true;

  bool matches(const model::Configuration& c) const;

  static Target exactly(model::StateId state, const Vec& counters);
  /// State `state`, empty stack, every counter >= `at_least`.
  static Target covering(model::StateId state, const Vec& at_least);
};

struct Stats {
  std::size_t visited = 0;
  std::size_t expanded = 0;
  std::size_t prunedCounter = 0;
  std::size_t prunedStack = 0;
  std::size_t maxStack = 0;
  bool nodeCapHit = false;

  void write(std::ostream& out) const;
};

struct Verdict {
  bool reached = false;
  std::vector<std::size_t> witness;  // indices into the transition list
  Stats stats;
};

Verdict bounded_reach(const model::Machine& m, const model::Configuration& source,
                      const Target& target, const Bounds& bounds);

/// PVAS variant: configurations use state 0.
Verdict bounded_reach(const model::Pvas& p, const model::Configuration& source,
                      const Target& target, const Bounds& bounds);

/// Re-executes a witness; returns the visited configurations (source first)
/// or nullopt if some step is not enabled under `mode`.
std::optional<std::vector<model::Configuration>> replay(const model::Machine& m,
                                                       const model::Configuration& source,
                                                       const std::vector<std::size_t>& witness,
                                                       Mode mode);
std::optional<std::vector<model::Configuration>> replay(const model::Pvas& p,
                                                       const model::Configuration& source,
                                                       const std::vector<std::size_t>& witness,
                                                       Mode mode);

/// Everything reachable from one source within bounds, with BFS parents, so
/// that many target queries can share one search.
class Exploration {
 public:
  Exploration(const model::Machine& m, const model::Configuration& source, const Bounds& bounds);
  Exploration(const model::Pvas& p, const model::Configuration& source, const Bounds& bounds);

  std::size_t size() const { return order_.size(); }
  model::Configuration configuration(std::size_t index) const;
  const Stats& stats() const { return stats_; }
  /// Index of the first (shortest) configuration matching `t`.
  std::optional<std::size_t> find(const Target& t) const;
  std::vector<std::size_t> witness_to(std::size_t index) const;

 private:
  friend struct Search;
  Exploration() = default;

  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<const std::string*> order_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> via_;
  Stats stats_;
};

}  // namespace pdvass::explore
