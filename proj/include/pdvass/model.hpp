#pragma once

// Machines: d-dimensional pushdown VASS (states + stack + counters) and
// single-state pushdown VAS, plus the normalizations every decision
// procedure in this library expects.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdvass/common.hpp"

namespace pdvass::model {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

enum class OpKind : std::uint8_t { Internal, Push, Pop };

struct StackOp {
  OpKind kind = OpKind::Internal;
  SymbolId symbol = 0;  // meaningless for Internal

  static StackOp internal() { return {}; }
  static StackOp push(SymbolId s) { return {OpKind::Push, s}; }
  static StackOp pop(SymbolId s) { return {OpKind::Pop, s}; }

  /// push a <-> pop a, internal <-> internal.
  StackOp inverse() const;
  bool is_internal() const { return kind == OpKind::Internal; }

  friend bool operator==(const StackOp& a, const StackOp& b) {
    return a.kind == b.kind && (a.kind == OpKind::Internal || a.symbol == b.symbol);
  }
  friend std::strong_ordering operator<=>(const StackOp& a, const StackOp& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (a.kind == OpKind::Internal) return std::strong_ordering::equal;
    return a.symbol <=> b.symbol;
  }
};

struct Transition {
  StateId from = 0;
  Vec effect;
  StackOp op;
  StateId to = 0;

  /// (q, -v, inverse(op), p) for (p, v, op, q).
  Transition reversed() const;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A d-dimensional PVASS. Immutable; the constructor validates references and
/// canonicalizes the transition list (sorted, duplicates removed).
class Machine {
 public:
  Machine(std::size_t dimension, std::vector<std::string> states,
          std::vector<std::string> alphabet, std::vector<Transition> transitions);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::size_t state_count() const { return states_.size(); }

  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  StateId state_id(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  bool contains(const Transition& t) const;
  bool is_bidirected() const;
  /// No transition both changes a counter and touches the stack.
  bool is_separated() const;
  Int max_abs_effect() const;

  friend bool operator==(const Machine&, const Machine&) = default;

 private:
  std::size_t dimension_;
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> transitions_;
};

struct PvasTransition {
  Vec take;  // subtracted first; counters must stay >= 0
  Vec give;  // then added
  StackOp op;

  PvasTransition reversed() const { return {give, take, op.inverse()}; }

  friend bool operator==(const PvasTransition&, const PvasTransition&) = default;
  friend auto operator<=>(const PvasTransition&, const PvasTransition&) = default;
};

/// Single-state pushdown VAS; transitions canonicalized like Machine.
class Pvas {
 public:
  Pvas(std::size_t dimension, std::vector<std::string> alphabet,
       std::vector<PvasTransition> transitions);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<PvasTransition>& transitions() const { return transitions_; }

  bool is_bidirected() const;

  friend bool operator==(const Pvas&, const Pvas&) = default;

 private:
  std::size_t dimension_;
  std::vector<std::string> alphabet_;
  std::vector<PvasTransition> transitions_;
};

struct Configuration {
  StateId state = 0;
  Vec counters;
  std::vector<SymbolId> stack;  // top at the back

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Adds every missing reverse transition. Idempotent.
Machine bidirected_closure(const Machine& m);

/// Splits each transition that both changes counters and pushes/pops into an
/// internal counter step followed by the stack step, through a fresh state.
/// A transition and its reverse share the fresh state, so bidirected inputs
/// stay bidirected.
Machine separate_counter_stack(const Machine& m);

/// Rewrites a k-letter alphabet (k > 2) over {a, b}: letter i (1-based) is
/// the word a b^i a b^(k-i) a, pushed letter by letter and popped in reverse.
Machine binarize_alphabet(const Machine& m);

/// The code word of letter `index` (1-based) out of `k`, as 0 = a, 1 = b.
std::vector<SymbolId> binary_code_word(std::size_t index, std::size_t k);

struct PvasEncoding {
  Pvas pvas;
  Vec source;
  Vec target;
};

/// Encodes state q_i (1-based index i among n states) as two extra counters
/// (i, n - i) appended after the d original counters.
PvasEncoding pvass_to_pvas(const Machine& m, StateId source, StateId target);

/// Direct PVAS view of a single-state machine (no extra counters).
Pvas machine_as_pvas(const Machine& m);

}  // namespace pdvass::model
