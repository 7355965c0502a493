#pragma once

// The command layer behind the pdvass executable. Reports are key=value
// lines (the verdict first) followed by an optional TSV trace; diagnostics
// go to the log stream.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pdvass/common.hpp"

namespace pdvass::cli {

enum ExitCode : int { kOk = 0, kInternalError = 1, kInputError = 2, kCapExceeded = 3 };

struct Command {
  std::string name;  // reach1d | cover | zreach | reach | cong | oracle | gen | info
  std::string input;
  std::string from;
  std::string to;
  std::string fromCounters;  // "1,2"; zeros when empty
  std::string toCounters;
  std::size_t maxLevel = 64;
  Int counterMax = 32;
  std::size_t stackMax = 10;
  std::size_t nodeMax = 2'000'000;
  std::string mode = "nat";  // oracle: nat | int
  bool trace = false;
  std::string pair;  // cong: "s;t"

  // gen
  std::string family = "random";  // random | valley
  std::uint64_t seed = 1;
  std::size_t bits = 1;
  std::size_t states = 3;
  std::size_t symbols = 2;
  std::size_t transitions = 5;
  Int maxEffect = 2;
  std::size_t dimension = 1;
  std::string output;
};

int run_command(const Command& c, std::ostream& report, std::ostream& log);

}  // namespace pdvass::cli
