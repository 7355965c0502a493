#include "pdvass/generators.hpp"

#include <random>
#include <string>

namespace pdvass::gen {

using model::StackOp;
using model::StateId;
using model::Transition;

namespace {

class Builder {
 public:
  StateId state(const std::string& name) {
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (states_[i] == name) return static_cast<StateId>(i);
    states_.push_back(name);
    return static_cast<StateId>(states_.size() - 1);
  }
  void add(const std::string& from, Int delta, StackOp op, const std::string& to) {
    ts_.push_back({state(from), Vec{delta}, op, state(to)});
  }
  model::Machine build(std::vector<std::string> alphabet) {
    return model::bidirected_closure(model::Machine(1, states_, std::move(alphabet), ts_));
  }

 private:
  std::vector<std::string> states_;
  std::vector<Transition> ts_;
};

// Adds 2^bits * sign to the counter: each tick changes it by sign and
// increments a binary counter kept on the stack (least significant bit on
// top); the overflow leaves through `exit`.
void binary_gadget(Builder& b, const std::string& tag, std::size_t bits, Int sign, model::SymbolId zero,
                   model::SymbolId one, const std::string& entry, const std::string& exit) {
  auto name = [&](const char* part, std::size_t i) { return tag + "_" + part + std::to_string(i); };
  b.add(entry, 0, StackOp::internal(), name("init", 0));
  for (std::size_t i = 0; i < bits; ++i) b.add(name("init", i), 0, StackOp::push(zero), name("init", i + 1));
  const std::string tick = tag + "_tick";
  b.add(name("init", bits), 0, StackOp::internal(), tick);
  b.add(tick, sign, StackOp::internal(), name("c", 0));
  for (std::size_t j = 0; j < bits; ++j) {
    b.add(name("c", j), 0, StackOp::pop(one), name("c", j + 1));
    b.add(name("c", j), 0, StackOp::pop(zero), name("w", j));
    b.add(name("w", j), 0, StackOp::push(one), name("z", j));
    for (std::size_t i = j; i > 0; --i) b.add(name("z", i), 0, StackOp::push(zero), name("z", i - 1));
    if (j == 0) b.add(name("z", 0), 0, StackOp::internal(), tick);
  }
  b.add(name("c", bits), 0, StackOp::internal(), exit);
}

}  // namespace

model::Machine valley(std::size_t bits) {
  if (bits == 0) throw PreconditionError("valley needs at least one bit");
  // Symbols: marker, then 0/1 for the decrementing and incrementing gadgets.
  std::vector<std::string> alphabet{"s", "0d", "1d", "0i", "1i"};
  Builder b;
  b.state("p");
  b.state("q");
  b.add("p", 0, StackOp::push(0), "p'");
  b.add("p'", 1, StackOp::internal(), "p");
  b.add("q", 0, StackOp::push(0), "q'");
  b.add("q'", 1, StackOp::internal(), "q");
  binary_gadget(b, "D", bits, -1, 1, 2, "p", "D_done");
  binary_gadget(b, "I", bits, +1, 3, 4, "D_done", "q");
  return b.build(std::move(alphabet));
}

model::Machine random_machine(const RandomSpec& spec) {
  if (spec.states == 0 || spec.dimension == 0) throw PreconditionError("random machine needs states and counters");
  std::mt19937_64 rng(spec.seed);
  auto pick = [&](std::uint64_t n) { return static_cast<Int>(rng() % n); };
  std::vector<std::string> states, alphabet;
  for (std::size_t i = 0; i < spec.states; ++i) states.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < spec.symbols; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Transition> ts;
  for (std::size_t k = 0; k < spec.transitions; ++k) {
    Transition t;
    t.from = static_cast<StateId>(pick(spec.states));
    t.to = static_cast<StateId>(pick(spec.states));
    for (std::size_t i = 0; i < spec.dimension; ++i)
      t.effect.push_back(pick(static_cast<std::uint64_t>(2 * spec.maxEffect + 1)) - spec.maxEffect);
    auto kind = spec.symbols == 0 ? 0 : pick(3);
    auto symbol = static_cast<model::SymbolId>(spec.symbols == 0 ? 0 : pick(spec.symbols));
    t.op = kind == 0 ? StackOp::internal() : kind == 1 ? StackOp::push(symbol) : StackOp::pop(symbol);
    ts.push_back(std::move(t));
  }
  return model::bidirected_closure(model::Machine(spec.dimension, states, alphabet, ts));
}

model::Pvas random_pvas(const RandomPvasSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto pick = [&](std::uint64_t n) { return static_cast<Int>(rng() % n); };
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < spec.symbols; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<model::PvasTransition> ts;
  for (std::size_t k = 0; k < spec.pairs; ++k) {
    model::PvasTransition t;
    for (std::size_t i = 0; i < spec.dimension; ++i) {
      t.take.push_back(pick(static_cast<std::uint64_t>(spec.maxEntry + 1)));
      t.give.push_back(pick(static_cast<std::uint64_t>(spec.maxEntry + 1)));
    }
    auto kind = spec.symbols == 0 ? 0 : pick(3);
    auto symbol = static_cast<model::SymbolId>(spec.symbols == 0 ? 0 : pick(spec.symbols));
    t.op = kind == 0 ? StackOp::internal() : kind == 1 ? StackOp::push(symbol) : StackOp::pop(symbol);
    ts.push_back(t);
    ts.push_back(t.reversed());
  }
  return model::Pvas(spec.dimension, alphabet, ts);
}

}  // namespace pdvass::gen
