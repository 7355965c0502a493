#include "pdvass/explorer.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace pdvass::explore {

using model::Configuration;
using model::OpKind;
using model::StackOp;

bool Target::matches(const Configuration& c) const {
  if (state && c.state != *state) return false;
  if (emptyStack && !c.stack.empty()) return false;
  for (std::size_t i = 0; i < counters.size() && i < c.counters.size(); ++i) {
    const auto& g = counters[i];
    if (g.cmp == Cmp::Eq && c.counters[i] != g.value) return false;
    if (g.cmp == Cmp::Ge && c.counters[i] < g.value) return false;
  }
  return true;
}

Target Target::exactly(model::StateId state, const Vec& counters) {
  Target t;
  t.state = state;
  for (Int v : counters) t.counters.push_back({Cmp::Eq, v});
  return t;
}

Target Target::covering(model::StateId state, const Vec& at_least) {
  Target t;
  t.state = state;
  for (Int v : at_least) t.counters.push_back({Cmp::Ge, v});
  return t;
}

void Stats::write(std::ostream& out) const {
  out << "visited=" << visited << '\n'
      << "expanded=" << expanded << '\n'
      << "pruned_counter=" << prunedCounter << '\n'
      << "pruned_stack=" << prunedStack << '\n'
      << "max_stack=" << maxStack << '\n'
      << "node_cap_hit=" << (nodeCapHit ? 1 : 0) << '\n';
}

namespace {

// Uniform step view: a step is enabled when counters >= need (Nat mode),
// and adds delta.
struct Step {
  model::StateId from;
  Vec need;
  Vec delta;
  StackOp op;
  model::StateId to;
};

std::vector<Step> steps_of(const model::Machine& m) {
  std::vector<Step> out;
  for (const auto& t : m.transitions()) {
    Vec need(t.effect.size());
    for (std::size_t i = 0; i < need.size(); ++i) need[i] = std::max<Int>(-t.effect[i], 0);
    out.push_back({t.from, std::move(need), t.effect, t.op, t.to});
  }
  return out;
}

std::vector<Step> steps_of(const model::Pvas& p) {
  std::vector<Step> out;
  for (const auto& t : p.transitions()) out.push_back({0, t.take, vec::sub(t.give, t.take), t.op, 0});
  return out;
}

constexpr Int kMaxEncodable = 30000;

// Key layout: state (2 bytes), counters (2 bytes each), then one byte per
// stack symbol, bottom first.
std::string encode(const Configuration& c) {
  std::string key(2 + 2 * c.counters.size() + c.stack.size(), '\0');
  auto s = static_cast<std::uint16_t>(c.state);
  std::memcpy(key.data(), &s, 2);
  for (std::size_t i = 0; i < c.counters.size(); ++i) {
    auto v = static_cast<std::int16_t>(c.counters[i]);
    std::memcpy(key.data() + 2 + 2 * i, &v, 2);
  }
  for (std::size_t i = 0; i < c.stack.size(); ++i)
    key[2 + 2 * c.counters.size() + i] = static_cast<char>(c.stack[i]);
  return key;
}

Configuration decode(const std::string& key, std::size_t dimension) {
  Configuration c;
  std::uint16_t s;
  std::memcpy(&s, key.data(), 2);
  c.state = s;
  c.counters.resize(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    std::int16_t v;
    std::memcpy(&v, key.data() + 2 + 2 * i, 2);
    c.counters[i] = v;
  }
  for (std::size_t i = 2 + 2 * dimension; i < key.size(); ++i)
    c.stack.push_back(static_cast<unsigned char>(key[i]));
  return c;
}

bool within(const Configuration& c, const Bounds& b) {
  if (c.stack.size() > b.stackMax) return false;
  for (Int v : c.counters) {
    if (v > b.counterMax) return false;
    if (v < (b.mode == Mode::Nat ? 0 : -b.counterMax)) return false;
  }
  return true;
}

// Applies one step; nullopt when disabled. Bounds are not checked here.
std::optional<Configuration> apply(const Step& s, const Configuration& c, Mode mode) {
  if (s.from != c.state) return std::nullopt;
  if (mode == Mode::Nat) {
    for (std::size_t i = 0; i < s.need.size(); ++i)
      if (c.counters[i] < s.need[i]) return std::nullopt;
  }
  Configuration n = c;
  if (s.op.kind == OpKind::Pop) {
    if (n.stack.empty() || n.stack.back() != s.op.symbol) return std::nullopt;
    n.stack.pop_back();
  } else if (s.op.kind == OpKind::Push) {
    n.stack.push_back(s.op.symbol);
  }
  vec::add_into(n.counters, s.delta);
  n.state = s.to;
  return n;
}

}  // namespace

struct Search {
  static Verdict reach(const std::vector<Step>& steps, std::size_t states, std::size_t symbols,
                       std::size_t dimension, const Configuration& source, const Target& target,
                       const Bounds& bounds);

  // Runs BFS into `into`; stops early at the first configuration matching
  // `target` (if given) and returns its index.
  static std::optional<std::size_t> run(Exploration& into, const std::vector<Step>& steps,
                                        std::size_t state_count, std::size_t alphabet_size,
                                        std::size_t dimension, const Configuration& source,
                                        const Bounds& bounds, const Target* target) {
    if (bounds.counterMax > kMaxEncodable || state_count > 65535 || alphabet_size > 256)
      throw PreconditionError("explorer bounds or machine too large for configuration encoding");
    if (source.counters.size() != dimension) throw PreconditionError("source has wrong dimension");
    if (!within(source, bounds)) throw PreconditionError("source configuration outside bounds");

    std::vector<std::vector<std::size_t>> by_state(state_count);
    for (std::size_t i = 0; i < steps.size(); ++i) by_state[steps[i].from].push_back(i);

    into.dimension_ = dimension;
    auto& stats = into.stats_;
    auto insert = [&](std::string key, std::uint32_t parent, std::uint32_t via) -> bool {
      auto [it, fresh] = into.index_.emplace(std::move(key), static_cast<std::uint32_t>(into.order_.size()));
      if (!fresh) return false;
      into.order_.push_back(&it->first);
      into.parent_.push_back(parent);
      into.via_.push_back(via);
      ++stats.visited;
      return true;
    };
    constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
    insert(encode(source), kNone, kNone);
    stats.maxStack = source.stack.size();
    if (target && target->matches(source)) return 0;

    for (std::size_t head = 0; head < into.order_.size(); ++head) {
      Configuration c = decode(*into.order_[head], dimension);
      ++stats.expanded;
      for (std::size_t si : by_state[c.state]) {
        auto next = apply(steps[si], c, bounds.mode);
        if (!next) continue;
        if (next->stack.size() > bounds.stackMax) {
          ++stats.prunedStack;
          continue;
        }
        if (!within(*next, bounds)) {
          ++stats.prunedCounter;
          continue;
        }
        std::string key = encode(*next);
        if (into.index_.count(key)) continue;
        if (into.order_.size() >= bounds.nodeMax) {
          stats.nodeCapHit = true;
          return std::nullopt;
        }
        insert(std::move(key), static_cast<std::uint32_t>(head), static_cast<std::uint32_t>(si));
        stats.maxStack = std::max(stats.maxStack, next->stack.size());
        if (target && target->matches(*next)) return into.order_.size() - 1;
      }
    }
    return std::nullopt;
  }
};

Exploration::Exploration(const model::Machine& m, const Configuration& source, const Bounds& bounds) {
  Search::run(*this, steps_of(m), m.state_count(), m.alphabet().size(), m.dimension(), source, bounds,
              nullptr);
}

Exploration::Exploration(const model::Pvas& p, const Configuration& source, const Bounds& bounds) {
  Search::run(*this, steps_of(p), 1, p.alphabet().size(), p.dimension(), source, bounds, nullptr);
}

Configuration Exploration::configuration(std::size_t index) const {
  return decode(*order_.at(index), dimension_);
}

std::optional<std::size_t> Exploration::find(const Target& t) const {
  for (std::size_t i = 0; i < order_.size(); ++i)
    if (t.matches(configuration(i))) return i;
  return std::nullopt;
}

std::vector<std::size_t> Exploration::witness_to(std::size_t index) const {
  std::vector<std::size_t> w;
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = index; parent_.at(i) != kNone; i = parent_[i]) w.push_back(via_[i]);
  std::reverse(w.begin(), w.end());
  return w;
}

Verdict Search::reach(const std::vector<Step>& steps, std::size_t states, std::size_t symbols,
                      std::size_t dimension, const Configuration& source, const Target& target,
                      const Bounds& bounds) {
  Exploration e;
  auto hit = run(e, steps, states, symbols, dimension, source, bounds, &target);
  Verdict v;
  v.stats = e.stats_;
  if (hit) {
    v.reached = true;
    v.witness = e.witness_to(*hit);
  }
  return v;
}

Verdict bounded_reach(const model::Machine& m, const Configuration& source, const Target& target,
                      const Bounds& bounds) {
  return Search::reach(steps_of(m), m.state_count(), m.alphabet().size(), m.dimension(), source,
                       target, bounds);
}

Verdict bounded_reach(const model::Pvas& p, const Configuration& source, const Target& target,
                      const Bounds& bounds) {
  return Search::reach(steps_of(p), 1, p.alphabet().size(), p.dimension(), source, target, bounds);
}

namespace {

std::optional<std::vector<Configuration>> replay_steps(const std::vector<Step>& steps,
                                                       const Configuration& source,
                                                       const std::vector<std::size_t>& witness,
                                                       Mode mode) {
  std::vector<Configuration> trace{source};
  for (std::size_t i : witness) {
    if (i >= steps.size()) return std::nullopt;
    auto next = apply(steps[i], trace.back(), mode);
    if (!next) return std::nullopt;
    if (mode == Mode::Nat && !vec::is_nonneg(next->counters)) return std::nullopt;
    trace.push_back(std::move(*next));
  }
  return trace;
}

}  // namespace

std::optional<std::vector<Configuration>> replay(const model::Machine& m, const Configuration& source,
                                                 const std::vector<std::size_t>& witness, Mode mode) {
  return replay_steps(steps_of(m), source, witness, mode);
}

std::optional<std::vector<Configuration>> replay(const model::Pvas& p, const Configuration& source,
                                                 const std::vector<std::size_t>& witness, Mode mode) {
  return replay_steps(steps_of(p), source, witness, mode);
}

}  // namespace pdvass::explore
