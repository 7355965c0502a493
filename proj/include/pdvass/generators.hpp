#pragma once

// Instance generators: the valley family, whose reachability witnesses need
// a stack of height about 2^m, and seeded random machines.

#include <cstdint>

#include "pdvass/model.hpp"

namespace pdvass::gen {

/// One-counter machine with states p and q. From p the counter is pumped
/// with a stack marker per unit; then a gadget keeping an m-bit binary
/// counter on the stack subtracts 2^m, a second one adds 2^m back, and q
/// pops the markers again. Bidirected and separated.
model::Machine valley(std::size_t bits);

struct RandomSpec {
  std::uint64_t seed = 1;
  std::size_t states = 3;
  std::size_t symbols = 2;
  std::size_t transitions = 5;  // before the bidirected closure
  Int maxEffect = 2;
  std::size_t dimension = 1;
};

/// Seeded random machine, bidirected by closure. States are named q0, q1, ...
/// and symbols a, b, c, ...
model::Machine random_machine(const RandomSpec& spec);

struct RandomPvasSpec {
  std::uint64_t seed = 1;
  std::size_t dimension = 2;
  std::size_t symbols = 1;
  std::size_t pairs = 3;  // transitions, each added with its reverse
  Int maxEntry = 2;
};

model::Pvas random_pvas(const RandomPvasSpec& spec);

}  // namespace pdvass::gen
