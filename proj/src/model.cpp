#include "pdvass/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pdvass::model {

StackOp StackOp::inverse() const {
  switch (kind) {
    case OpKind::Push:
      return pop(symbol);
    case OpKind::Pop:
      return push(symbol);
    case OpKind::Internal:
      break;
  }
  return internal();
}

Transition Transition::reversed() const {
  return {to, vec::scale(effect, -1), op.inverse(), from};
}

namespace {

template <class T>
void sort_unique(std::vector<T>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

void check_names_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw PreconditionError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

void check_op(const StackOp& op, std::size_t alphabet_size) {
  if (!op.is_internal() && op.symbol >= alphabet_size)
    throw PreconditionError("stack operation references unknown symbol " + std::to_string(op.symbol));
}

std::string fresh_name(const std::string& wanted, std::set<std::string>& used) {
  std::string name = wanted;
  while (used.count(name)) name += '\'';
  used.insert(name);
  return name;
}

}  // namespace

Machine::Machine(std::size_t dimension, std::vector<std::string> states,
                 std::vector<std::string> alphabet, std::vector<Transition> transitions)
    : dimension_(dimension),
      states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)) {
  check_names_unique(states_, "state");
  check_names_unique(alphabet_, "stack symbol");
  for (auto& t : transitions_) {
    if (t.from >= states_.size() || t.to >= states_.size())
      throw PreconditionError("transition references unknown state");
    if (t.effect.size() != dimension_)
      throw PreconditionError("effect has length " + std::to_string(t.effect.size()) +
                              ", expected " + std::to_string(dimension_));
    check_op(t.op, alphabet_.size());
    if (t.op.is_internal()) t.op.symbol = 0;
  }
  sort_unique(transitions_);
}

std::optional<StateId> Machine::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

StateId Machine::state_id(std::string_view name) const {
  if (auto id = find_state(name)) return *id;
  throw PreconditionError("unknown state '" + std::string(name) + "'");
}

std::optional<SymbolId> Machine::find_symbol(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return static_cast<SymbolId>(i);
  return std::nullopt;
}

bool Machine::contains(const Transition& t) const {
  return std::binary_search(transitions_.begin(), transitions_.end(), t);
}

bool Machine::is_bidirected() const {
  return std::all_of(transitions_.begin(), transitions_.end(),
                     [&](const Transition& t) { return contains(t.reversed()); });
}

bool Machine::is_separated() const {
  return std::all_of(transitions_.begin(), transitions_.end(), [](const Transition& t) {
    return t.op.is_internal() || vec::is_zero(t.effect);
  });
}

Int Machine::max_abs_effect() const {
  Int m = 0;
  for (const auto& t : transitions_) m = std::max(m, vec::max_norm(t.effect));
  return m;
}

Pvas::Pvas(std::size_t dimension, std::vector<std::string> alphabet,
           std::vector<PvasTransition> transitions)
    : dimension_(dimension), alphabet_(std::move(alphabet)), transitions_(std::move(transitions)) {
  check_names_unique(alphabet_, "stack symbol");
  for (auto& t : transitions_) {
    if (t.take.size() != dimension_ || t.give.size() != dimension_)
      throw PreconditionError("PVAS transition vector has wrong length");
    if (!vec::is_nonneg(t.take) || !vec::is_nonneg(t.give))
      throw PreconditionError("PVAS transition vectors must be non-negative");
    check_op(t.op, alphabet_.size());
    if (t.op.is_internal()) t.op.symbol = 0;
  }
  sort_unique(transitions_);
}

bool Pvas::is_bidirected() const {
  return std::all_of(transitions_.begin(), transitions_.end(), [&](const PvasTransition& t) {
    return std::binary_search(transitions_.begin(), transitions_.end(), t.reversed());
  });
}

Machine bidirected_closure(const Machine& m) {
  std::vector<Transition> ts = m.transitions();
  for (const auto& t : m.transitions()) ts.push_back(t.reversed());
  return Machine(m.dimension(), m.states(), m.alphabet(), std::move(ts));
}

namespace {

// Shared driver for the two chain-expanding rewrites: each transition that
// `needs_rewrite` is replaced by `expand`, and its reverse (when present) by
// the mirrored chain through the same fresh states.
template <class Needs, class Expand>
Machine rewrite_pairs(const Machine& m, std::vector<std::string> alphabet, Needs needs_rewrite,
                      Expand expand, const char* tag) {
  std::vector<std::string> states = m.states();
  std::set<std::string> used(states.begin(), states.end());
  std::vector<Transition> out;
  std::set<Transition> handled;
  std::size_t counter = 0;

  for (const auto& t : m.transitions()) {
    if (!needs_rewrite(t)) {
      out.push_back(t);
      continue;
    }
    if (handled.count(t)) continue;
    auto fresh = [&](std::size_t j) {
      std::string want = states[t.from] + ">" + states[t.to] + "#" + tag + std::to_string(counter);
      if (j) want += "." + std::to_string(j);
      states.push_back(fresh_name(want, used));
      return static_cast<StateId>(states.size() - 1);
    };
    std::vector<Transition> chain = expand(t, fresh);
    ++counter;
    out.insert(out.end(), chain.begin(), chain.end());
    Transition rev = t.reversed();
    if (m.contains(rev)) {
      handled.insert(rev);
      for (const auto& c : chain) out.push_back(c.reversed());
    }
  }
  return Machine(m.dimension(), std::move(states), std::move(alphabet), std::move(out));
}

}  // namespace

Machine separate_counter_stack(const Machine& m) {
  auto needs = [](const Transition& t) { return !t.op.is_internal() && !vec::is_zero(t.effect); };
  auto expand = [&](const Transition& t, auto& fresh) {
    StateId mid = fresh(0);
    return std::vector<Transition>{{t.from, t.effect, StackOp::internal(), mid},
                                   {mid, vec::zeros(m.dimension()), t.op, t.to}};
  };
  return rewrite_pairs(m, m.alphabet(), needs, expand, "sep");
}

std::vector<SymbolId> binary_code_word(std::size_t index, std::size_t k) {
  if (index < 1 || index > k) throw PreconditionError("code word index out of range");
  std::vector<SymbolId> w{0};
  w.insert(w.end(), index, 1);
  w.push_back(0);
  w.insert(w.end(), k - index, 1);
  w.push_back(0);
  return w;
}

Machine binarize_alphabet(const Machine& m) {
  const std::size_t k = m.alphabet().size();
  if (k <= 2) return m;
  auto needs = [](const Transition& t) { return !t.op.is_internal(); };
  auto expand = [&](const Transition& t, auto& fresh) {
    std::vector<SymbolId> word = binary_code_word(t.op.symbol + 1, k);
    if (t.op.kind == OpKind::Pop) std::reverse(word.begin(), word.end());
    std::vector<Transition> chain;
    StateId cur = t.from;
    for (std::size_t j = 0; j < word.size(); ++j) {
      StateId next = (j + 1 == word.size()) ? t.to : fresh(j + 1);
      StackOp op = t.op.kind == OpKind::Push ? StackOp::push(word[j]) : StackOp::pop(word[j]);
      chain.push_back({cur, j == 0 ? t.effect : vec::zeros(m.dimension()), op, next});
      cur = next;
    }
    return chain;
  };
  return rewrite_pairs(m, {"a", "b"}, needs, expand, "bin");
}

PvasEncoding pvass_to_pvas(const Machine& m, StateId source, StateId target) {
  if (!m.is_bidirected()) throw PreconditionError("pvass_to_pvas requires a bidirected machine");
  const std::size_t d = m.dimension();
  const Int n = static_cast<Int>(m.state_count());
  if (source >= m.state_count() || target >= m.state_count())
    throw PreconditionError("pvass_to_pvas: unknown source/target state");
  auto state_part = [&](StateId q) {
    Int i = static_cast<Int>(q) + 1;
    return Vec{i, n - i};
  };
  std::vector<PvasTransition> ts;
  for (const auto& t : m.transitions()) {
    Vec take(d), give(d);
    for (std::size_t j = 0; j < d; ++j) {
      take[j] = std::max<Int>(-t.effect[j], 0);
      give[j] = std::max<Int>(t.effect[j], 0);
    }
    ts.push_back({vec::concat(take, state_part(t.from)), vec::concat(give, state_part(t.to)), t.op});
  }
  Pvas p(d + 2, m.alphabet(), std::move(ts));
  return {std::move(p), vec::concat(vec::zeros(d), state_part(source)),
          vec::concat(vec::zeros(d), state_part(target))};
}

Pvas machine_as_pvas(const Machine& m) {
  if (m.state_count() != 1) throw PreconditionError("machine_as_pvas requires exactly one state");
  const std::size_t d = m.dimension();
  std::vector<PvasTransition> ts;
  for (const auto& t : m.transitions()) {
    Vec take(d), give(d);
    for (std::size_t j = 0; j < d; ++j) {
      take[j] = std::max<Int>(-t.effect[j], 0);
      give[j] = std::max<Int>(t.effect[j], 0);
    }
    ts.push_back({take, give, t.op});
  }
  return Pvas(d, m.alphabet(), std::move(ts));
}

}  // namespace pdvass::model
