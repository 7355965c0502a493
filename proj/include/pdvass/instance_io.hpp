#pragma once

// Text format for machines (a JSON document):
//
//   {
//     "dimension": 1,
//     "states": ["p", "q"],
//     "alphabet": ["a"],
//     "transitions": [
//       {"from": "p", "effect": [1], "op": "internal", "to": "q"},
//       {"from": "p", "effect": [0], "op": {"push": "a"}, "to": "q"}
//     ],
//     "bidirected": true
//   }
//
// "alphabet" and "bidirected" are optional. With "bidirected": true the
// reverse of every listed transition is added. Unknown fields are rejected.

#include <string>
#include <string_view>

#include "pdvass/model.hpp"

namespace pdvass::io {

/// Throws ParseError (with line/column) on malformed input or unknown fields,
/// and on references to undeclared states or symbols.
model::Machine parse_machine(std::string_view text);

/// Reads and parses a file; I/O failures are reported as Error.
model::Machine read_machine_file(const std::string& path);

/// Canonical form: one transition per line in the machine's sorted order.
/// parse_machine(serialize_machine(m)) == m.
std::string serialize_machine(const model::Machine& m);

std::string read_file(const std::string& path);

/// Congruence bases as text, one pair per line: "1,0 ; 0,2". Blank lines
/// and lines starting with '#' are skipped. An optional first line
/// "dimension N" fixes the dimension (needed for an empty basis).
struct BasisText {
  std::size_t dimension = 0;
  std::vector<std::pair<Vec, Vec>> pairs;
};
BasisText parse_basis(std::string_view text);

}  // namespace pdvass::io
