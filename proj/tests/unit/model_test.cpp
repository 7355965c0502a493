// Machines, normalizations and the instance format.

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pdvass/explorer.hpp"
#include "pdvass/generators.hpp"
#include "pdvass/instance_io.hpp"
#include "pdvass/model.hpp"

using namespace pdvass;
using model::Machine;
using model::StackOp;
using model::Transition;

namespace {

Machine two_states(std::vector<Transition> ts, std::vector<std::string> alphabet = {"a"}) {
  return Machine(1, {"p", "q"}, std::move(alphabet), std::move(ts));
}

/// Random machine with small effects, used by the property checks.
Machine small_random(oracle::Rng& rng, std::size_t states, std::size_t transitions, Int maxEffect,
                     std::size_t symbols) {
  std::vector<std::string> names, alphabet;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < symbols; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Transition> ts;
  for (std::size_t k = 0; k < transitions; ++k) {
    Transition t;
    t.from = static_cast<model::StateId>(rng.below(states));
    t.to = static_cast<model::StateId>(rng.below(states));
    t.effect = {rng.range(-maxEffect, maxEffect)};
    std::size_t kind = symbols ? rng.below(3) : 0;
    auto sym = static_cast<model::SymbolId>(symbols ? rng.below(symbols) : 0);
    t.op = kind == 0 ? StackOp::internal() : kind == 1 ? StackOp::push(sym) : StackOp::pop(sym);
    ts.push_back(t);
  }
  return model::bidirected_closure(Machine(1, names, alphabet, ts));
}

bool reaches(const Machine& m, model::StateId p, model::StateId q, Int counter, std::size_t stack) {
  explore::Bounds b;
  b.counterMax = counter;
  b.stackMax = stack;
  return explore::bounded_reach(m, {p, {0}, {}}, explore::Target::exactly(q, {0}), b).reached;
}

}  // namespace

TEST_CASE("bidirected closure adds the reverse transitions") {
  Machine m = two_states({{0, {1}, StackOp::internal(), 1}});
  Machine c = model::bidirected_closure(m);
  CHECK(c.contains({1, {-1}, StackOp::internal(), 0}));
  CHECK(c.transitions().size() == 2);

  Machine push = two_states({{0, {0}, StackOp::push(0), 1}});
  CHECK(model::bidirected_closure(push).contains({1, {0}, StackOp::pop(0), 0}));
  CHECK(model::bidirected_closure(c) == c);
  CHECK(c.is_bidirected());
  CHECK_FALSE(m.is_bidirected());
}

TEST_CASE("closure is idempotent on random machines") {
  oracle::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Machine m = small_random(rng, 1 + rng.below(3), 1 + rng.below(5), 2, rng.below(3));
    CHECK(model::bidirected_closure(m) == m);
  }
}

TEST_CASE("separation splits mixed transitions through a fresh state") {
  Machine m = model::bidirected_closure(two_states({{0, {2}, StackOp::push(0), 1}}));
  Machine s = model::separate_counter_stack(m);
  REQUIRE(s.state_count() == 3);
  const model::StateId mid = 2;
  CHECK(s.contains({0, {2}, StackOp::internal(), mid}));
  CHECK(s.contains({mid, {0}, StackOp::push(0), 1}));
  CHECK(s.contains({mid, {-2}, StackOp::internal(), 0}));
  CHECK(s.contains({1, {0}, StackOp::pop(0), mid}));
  CHECK(s.transitions().size() == 4);
  CHECK(s.is_separated());
  CHECK(s.is_bidirected());

  Machine already = model::bidirected_closure(two_states({{0, {1}, StackOp::internal(), 1}}));
  CHECK(model::separate_counter_stack(already) == already);
}

TEST_CASE("separation keeps explorer verdicts and leaves no mixed transition") {
  oracle::Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    Machine m = small_random(rng, 1 + rng.below(3), 1 + rng.below(4), 2, 1 + rng.below(2));
    Machine s = model::separate_counter_stack(m);
    for (const auto& t : s.transitions())
      if (!vec::is_zero(t.effect)) CHECK(t.op.is_internal());
    for (model::StateId p = 0; p < m.state_count(); ++p)
      for (model::StateId q = 0; q < m.state_count(); ++q)
        CHECK(reaches(m, p, q, 8, 6) == reaches(s, p, q, 8, 6));
  }
}

TEST_CASE("binary code words") {
  CHECK(model::binary_code_word(2, 3) == std::vector<model::SymbolId>{0, 1, 1, 0, 1, 0});
  CHECK(model::binary_code_word(1, 3) == std::vector<model::SymbolId>{0, 1, 0, 1, 1, 0});
  CHECK_THROWS_AS(model::binary_code_word(0, 3), PreconditionError);

  Machine two = model::bidirected_closure(two_states({{0, {0}, StackOp::push(1), 1}}, {"a", "b"}));
  CHECK(model::binarize_alphabet(two) == two);
}

TEST_CASE("binarization preserves reachability on a three-symbol machine") {
  // p pushes x then y; q pops them in order only through r.
  Machine m = model::bidirected_closure(Machine(1, {"p", "q", "r"}, {"x", "y", "z"},
                                                {{0, {1}, StackOp::push(0), 1},
                                                 {1, {0}, StackOp::push(2), 2},
                                                 {2, {1}, StackOp::pop(2), 0},
                                                 {0, {-1}, StackOp::pop(0), 2}}));
  Machine b = model::binarize_alphabet(m);
  CHECK(b.alphabet().size() == 2);
  CHECK(b.is_bidirected());
  for (model::StateId p = 0; p < 3; ++p)
    for (model::StateId q = 0; q < 3; ++q) CHECK(reaches(m, p, q, 6, 4) == reaches(b, p, q, 6, 24));
}

TEST_CASE("state encoding into two extra counters") {
  Machine one = model::bidirected_closure(Machine(1, {"p"}, {}, {{0, {1}, StackOp::internal(), 0}}));
  auto e1 = model::pvass_to_pvas(one, 0, 0);
  CHECK(e1.pvas.dimension() == 3);
  CHECK(std::count(e1.pvas.transitions().begin(), e1.pvas.transitions().end(),
                   model::PvasTransition{{0, 1, 0}, {1, 1, 0}, StackOp::internal()}) == 1);

  Machine m = model::bidirected_closure(two_states({{0, {-1}, StackOp::internal(), 1}}, {}));
  auto e = model::pvass_to_pvas(m, 0, 1);
  CHECK(std::count(e.pvas.transitions().begin(), e.pvas.transitions().end(),
                   model::PvasTransition{{1, 1, 1}, {0, 2, 0}, StackOp::internal()}) == 1);
  CHECK(e.source == Vec{0, 1, 1});
  CHECK(e.target == Vec{0, 2, 0});
  CHECK(e.pvas.is_bidirected());
}

TEST_CASE("state encoding agrees with the machine under the explorer") {
  oracle::Rng rng(13);
  explore::Bounds b;
  b.counterMax = 10;
  b.stackMax = 6;
  for (int i = 0; i < 80; ++i) {
    Machine m = small_random(rng, 1 + rng.below(3), 1 + rng.below(4), 1, rng.below(3));
    for (model::StateId p = 0; p < m.state_count(); ++p)
      for (model::StateId q = 0; q < m.state_count(); ++q) {
        auto enc = model::pvass_to_pvas(m, p, q);
        bool viaPvas =
            explore::bounded_reach(enc.pvas, {0, enc.source, {}}, explore::Target::exactly(0, enc.target), b).reached;
        CHECK(reaches(m, p, q, 10, 6) == viaPvas);
      }
  }
}

TEST_CASE("single-state machines map directly to a PVAS") {
  Machine m = model::bidirected_closure(Machine(2, {"s"}, {"a"}, {{0, {1, -2}, StackOp::push(0), 0}}));
  auto p = model::machine_as_pvas(m);
  CHECK(p.dimension() == 2);
  CHECK(std::count(p.transitions().begin(), p.transitions().end(),
                   model::PvasTransition{{0, 2}, {1, 0}, StackOp::push(0)}) == 1);
  CHECK_THROWS_AS(model::machine_as_pvas(model::bidirected_closure(two_states({}))), PreconditionError);
}

TEST_CASE("machine validation") {
  CHECK_THROWS_AS(Machine(1, {"p"}, {}, {{0, {1}, StackOp::internal(), 3}}), PreconditionError);
  CHECK_THROWS_AS(Machine(1, {"p"}, {}, {{0, {1, 1}, StackOp::internal(), 0}}), PreconditionError);
  CHECK_THROWS_AS(Machine(1, {"p"}, {}, {{0, {1}, StackOp::push(0), 0}}), PreconditionError);
}

TEST_CASE("instance text round-trips") {
  oracle::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    Machine m = small_random(rng, 1 + rng.below(3), 1 + rng.below(5), 2, rng.below(3));
    std::string text = io::serialize_machine(m);
    CHECK(io::parse_machine(text) == m);
    CHECK(io::serialize_machine(io::parse_machine(text)) == text);
  }
  Machine v = gen::valley(2);
  CHECK(io::parse_machine(io::serialize_machine(v)) == v);
}

TEST_CASE("instance parser errors carry positions") {
  const char* unknown = "{\n  \"dimension\": 1,\n  \"states\": [\"p\"],\n  \"colour\": 3,\n  \"transitions\": []\n}";
  try {
    io::parse_machine(unknown);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(io::parse_machine("{\"dimension\": 1, \"states\": [\"p\"], \"transitions\": ["
                                    "{\"from\": \"p\", \"effect\": [1], \"op\": \"internal\", \"to\": \"x\"}]}"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_machine("{\"dimension\": 1, "), ParseError);

  auto m = io::parse_machine(
      "{\"dimension\": 1, \"states\": [\"p\", \"q\"], \"alphabet\": [\"a\"], \"bidirected\": true, "
      "\"transitions\": [{\"from\": \"p\", \"effect\": [0], \"op\": {\"push\": \"a\"}, \"to\": \"q\"}]}");
  CHECK(m.is_bidirected());
  CHECK(m.transitions().size() == 2);
}

TEST_CASE("basis text") {
  auto b = io::parse_basis("# comment\ndimension 2\n1,0 ; 0,2\n\n3,1;1,1\n");
  CHECK(b.dimension == 2);
  REQUIRE(b.pairs.size() == 2);
  CHECK(b.pairs[0] == std::pair<Vec, Vec>{{1, 0}, {0, 2}});
  CHECK(io::parse_basis("dimension 3\n").pairs.empty());
  CHECK_THROWS_AS(io::parse_basis("1,0 ; 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_basis("1,-1 ; 0,0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_basis("1,0 ; 0,1x\n"), ParseError);
}
