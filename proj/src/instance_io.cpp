#include "pdvass/instance_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace pdvass::io {

namespace {

using Json = nlohmann::ordered_json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Positions of object keys in document order. The text has already been
// accepted by the JSON parser, so only strings need care.
std::vector<Position> key_positions(std::string_view text) {
  std::vector<Position> keys;
  Position pos;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '"') {
      advance(text[i++]);
      continue;
    }
    Position start = pos;
    advance(text[i++]);
    while (i < text.size() && text[i] != '"') {
      if (text[i] == '\\' && i + 1 < text.size()) advance(text[i++]);
      advance(text[i++]);
    }
    if (i < text.size()) advance(text[i++]);
    std::size_t j = i;
    while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\n' || text[j] == '\r')) ++j;
    if (j < text.size() && text[j] == ':') keys.push_back(start);
  }
  return keys;
}

// Walks the ordered document in the same order key_positions was produced,
// so each key visit can be matched with its source position.
class Reader {
 public:
  explicit Reader(std::vector<Position> keys) : keys_(std::move(keys)) {}

  model::Machine read(const Json& doc) {
    if (!doc.is_object()) fail("top-level value must be an object", Position{});
    std::optional<std::size_t> dimension;
    std::vector<std::string> states, alphabet;
    bool bidirected = false;
    bool have_states = false, have_transitions = false;
    struct RawTransition {
      std::string from, to;
      Vec effect;
      model::OpKind kind = model::OpKind::Internal;
      std::string symbol;
      Position at;
    };
    std::vector<RawTransition> raw;

    for (const auto& [key, value] : doc.items()) {
      Position at = next_key();
      if (key == "dimension") {
        if (!value.is_number_unsigned()) fail("'dimension' must be a non-negative integer", at);
        dimension = value.get<std::size_t>();
      } else if (key == "states") {
        states = names(value, "states", at);
        have_states = true;
      } else if (key == "alphabet") {
        alphabet = names(value, "alphabet", at);
      } else if (key == "bidirected") {
        if (!value.is_boolean()) fail("'bidirected' must be a boolean", at);
        bidirected = value.get<bool>();
      } else if (key == "transitions") {
        if (!value.is_array()) fail("'transitions' must be an array", at);
        have_transitions = true;
        for (const auto& item : value) {
          if (!item.is_object()) fail("transition must be an object", at);
          RawTransition t;
          bool seen_from = false, seen_to = false, seen_effect = false, seen_op = false;
          Position first = at;
          bool first_set = false;
          for (const auto& [tk, tv] : item.items()) {
            Position tat = next_key();
            if (!first_set) {
              first = tat;
              first_set = true;
            }
            if (tk == "from" || tk == "to") {
              if (!tv.is_string()) fail("'" + tk + "' must be a state name", tat);
              (tk == "from" ? t.from : t.to) = tv.get<std::string>();
              (tk == "from" ? seen_from : seen_to) = true;
            } else if (tk == "effect") {
              if (!tv.is_array()) fail("'effect' must be an integer array", tat);
              for (const auto& x : tv) {
                if (!x.is_number_integer()) fail("'effect' must be an integer array", tat);
                t.effect.push_back(x.get<Int>());
              }
              seen_effect = true;
            } else if (tk == "op") {
              seen_op = true;
              if (tv.is_string()) {
                if (tv.get<std::string>() != "internal")
                  fail("'op' must be \"internal\", {\"push\": s} or {\"pop\": s}", tat);
                t.kind = model::OpKind::Internal;
              } else if (tv.is_object() && tv.size() == 1) {
                const auto& [ok, ov] = *tv.items().begin();
                Position oat = next_key();
                if (ok != "push" && ok != "pop") fail("unknown field '" + ok + "'", oat);
                if (!ov.is_string()) fail("stack symbol must be a string", oat);
                t.kind = ok == "push" ? model::OpKind::Push : model::OpKind::Pop;
                t.symbol = ov.get<std::string>();
              } else {
                fail("'op' must be \"internal\", {\"push\": s} or {\"pop\": s}", tat);
              }
            } else {
              fail("unknown field '" + tk + "'", tat);
            }
          }
          if (!seen_from || !seen_to || !seen_effect || !seen_op)
            fail("transition needs 'from', 'effect', 'op' and 'to'", first);
          t.at = first;
          raw.push_back(std::move(t));
        }
      } else {
        fail("unknown field '" + key + "'", at);
      }
    }
    if (!dimension) fail("missing field 'dimension'", Position{});
    if (!have_states) fail("missing field 'states'", Position{});
    if (!have_transitions) fail("missing field 'transitions'", Position{});

    std::vector<model::Transition> ts;
    auto lookup = [](const std::vector<std::string>& xs, const std::string& name) -> std::optional<std::uint32_t> {
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == name) return static_cast<std::uint32_t>(i);
      return std::nullopt;
    };
    for (const auto& r : raw) {
      auto from = lookup(states, r.from);
      auto to = lookup(states, r.to);
      if (!from) fail("undeclared state '" + r.from + "'", r.at);
      if (!to) fail("undeclared state '" + r.to + "'", r.at);
      if (r.effect.size() != *dimension)
        fail("effect has length " + std::to_string(r.effect.size()) + ", expected " +
                 std::to_string(*dimension),
             r.at);
      model::StackOp op;
      if (r.kind != model::OpKind::Internal) {
        auto sym = lookup(alphabet, r.symbol);
        if (!sym) fail("undeclared stack symbol '" + r.symbol + "'", r.at);
        op = {r.kind, *sym};
      }
      ts.push_back({*from, r.effect, op, *to});
    }
    try {
      model::Machine m(*dimension, std::move(states), std::move(alphabet), std::move(ts));
      return bidirected ? model::bidirected_closure(m) : m;
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }

 private:
  Position next_key() {
    if (cursor_ < keys_.size()) return keys_[cursor_++];
    return {};
  }

  std::vector<std::string> names(const Json& value, const std::string& field, Position at) {
    if (!value.is_array()) fail("'" + field + "' must be an array of names", at);
    std::vector<std::string> out;
    for (const auto& x : value) {
      if (!x.is_string()) fail("'" + field + "' must be an array of names", at);
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what, Position at) {
    throw ParseError(what, at.line, at.column);
  }

  std::vector<Position> keys_;
  std::size_t cursor_ = 0;
};

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

model::Machine parse_machine(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    Position at = position_of(text, offset);
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw ParseError("malformed JSON (" + (colon == std::string::npos ? what : what.substr(colon + 2)) + ")",
                     at.line, at.column);
  }
  return Reader(key_positions(text)).read(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

model::Machine read_machine_file(const std::string& path) { return parse_machine(read_file(path)); }

std::string serialize_machine(const model::Machine& m) {
  std::ostringstream out;
  auto name_list = [&](const std::vector<std::string>& xs) {
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << quoted(xs[i]);
    out << ']';
  };
  out << "{\n  \"dimension\": " << m.dimension() << ",\n  \"states\": ";
  name_list(m.states());
  out << ",\n  \"alphabet\": ";
  name_list(m.alphabet());
  out << ",\n  \"transitions\": [";
  const auto& ts = m.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    out << (i ? ",\n    " : "\n    ") << "{\"from\": " << quoted(m.states()[t.from]) << ", \"effect\": [";
    for (std::size_t j = 0; j < t.effect.size(); ++j) out << (j ? ", " : "") << t.effect[j];
    out << "], \"op\": ";
    switch (t.op.kind) {
      case model::OpKind::Internal:
        out << "\"internal\"";
        break;
      case model::OpKind::Push:
        out << "{\"push\": " << quoted(m.alphabet()[t.op.symbol]) << '}';
        break;
      case model::OpKind::Pop:
        out << "{\"pop\": " << quoted(m.alphabet()[t.op.symbol]) << '}';
        break;
    }
    out << ", \"to\": " << quoted(m.states()[t.to]) << '}';
  }
  out << (ts.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

BasisText parse_basis(std::string_view text) {
  BasisText out;
  bool have_dimension = false;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 9, "dimension") == 0) {
      if (have_dimension || !out.pairs.empty()) throw ParseError("unexpected dimension line", line_no, first + 1);
      try {
        std::size_t used = 0;
        long long d = std::stoll(line.substr(first + 9), &used);
        if (d < 0 || line.find_first_not_of(" \t\r", first + 9 + used) != std::string::npos)
          throw std::invalid_argument("dimension");
        out.dimension = static_cast<std::size_t>(d);
      } catch (const std::exception&) {
        throw ParseError("expected 'dimension N'", line_no, first + 1);
      }
      have_dimension = true;
      continue;
    }
    auto semi = line.find(';');
    if (semi == std::string::npos) throw ParseError("expected 'u ; v'", line_no, first + 1);
    Vec u, v;
    try {
      u = vec::parse(line.substr(0, semi));
    } catch (const std::exception&) {
      throw ParseError("malformed vector", line_no, first + 1);
    }
    try {
      v = vec::parse(line.substr(semi + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed vector", line_no, semi + 2);
    }
    if (!have_dimension && out.pairs.empty()) out.dimension = u.size();
    if (u.size() != out.dimension || v.size() != out.dimension)
      throw ParseError("pair has dimension " + std::to_string(u.size()) + "/" + std::to_string(v.size()) +
                           ", expected " + std::to_string(out.dimension),
                       line_no, first + 1);
    if (!vec::is_nonneg(u) || !vec::is_nonneg(v)) throw ParseError("negative entry in pair", line_no, first + 1);
    out.pairs.push_back({std::move(u), std::move(v)});
  }
  return out;
}

}  // namespace pdvass::io
