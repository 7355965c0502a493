#pragma once

// Reachability in bidirected pushdown VAS by saturating congruences: R_0 is
// generated by the internal transitions, and R_i adds every pair obtained by
// wrapping an R_{i-1} run between a matching push and pop.

#include <iosfwd>
#include <optional>
#include <vector>

#include "pdvass/congruence.hpp"
#include "pdvass/model.hpp"

namespace pdvass::sat {

struct ChainEntry {
  std::size_t level = 0;
  std::size_t generators = 0;  // symmetrized basis size
  std::size_t components = 0;  // linear sets in the semilinear form
  /// A new generator that was not in the previous level's congruence.
  std::optional<cong::Pair> witness;
};

struct SaturationState {
  std::size_t level = 0;
  cong::CongruenceBasis basis{0};
  semilinear::SemilinearSet relation;
  std::vector<ChainEntry> chain;
  bool fixpoint = false;
};

struct SaturationOptions {
  std::size_t maxLevel = 64;
};

SaturationState initial_state(const model::Pvas& p);

/// One round of push/pop wrapping. Sets `fixpoint` (and leaves the basis
/// unchanged) when every new generator is already in the congruence.
SaturationState step(const SaturationState& state, const model::Pvas& p);

/// Iterates step until a fixpoint. Throws CapExceeded past maxLevel.
SaturationState saturate(const model::Pvas& p, const SaturationOptions& options = {});

bool decide_reach(const model::Pvas& p, const Vec& s, const Vec& t, const SaturationOptions& options = {});

/// Reachability between configurations (source, s, empty stack) and
/// (target, t, empty stack) of a bidirected machine, through its PVAS
/// encoding; single-state machines are used directly.
struct MachineQuery {
  model::Pvas pvas;
  Vec source;
  Vec target;
};
MachineQuery encode_query(const model::Machine& m, model::StateId source, const Vec& s, model::StateId target,
                          const Vec& t);

/// "level\tgenerators\tcomponents\twitness" rows.
void write_chain(std::ostream& out, const std::vector<ChainEntry>& chain);

}  // namespace pdvass::sat
