#include "pdvass/commands.hpp"

#include <fstream>
#include <ostream>

#include "pdvass/congruence.hpp"
#include "pdvass/explorer.hpp"
#include "pdvass/generators.hpp"
#include "pdvass/instance_io.hpp"
#include "pdvass/onedim.hpp"
#include "pdvass/saturation.hpp"

namespace pdvass::cli {

namespace {

using model::Machine;
using model::StateId;

struct InputError : Error {
  using Error::Error;
};

std::string read_input(const Command& c) {
  if (c.input.empty()) throw InputError("--input is required for '" + c.name + "'");
  if (!std::ifstream(c.input)) throw InputError("cannot open '" + c.input + "'");
  return io::read_file(c.input);
}

Machine load(const Command& c) { return io::parse_machine(read_input(c)); }

StateId state_arg(const Machine& m, const std::string& name, const char* flag) {
  if (name.empty()) throw InputError(std::string(flag) + " is required");
  auto id = m.find_state(name);
  if (!id) throw InputError(std::string(flag) + ": unknown state '" + name + "'");
  return *id;
}

Vec counters_arg(const std::string& text, std::size_t d, const char* flag) {
  if (text.empty()) return vec::zeros(d);
  Vec v;
  try {
    v = vec::parse(text);
  } catch (const std::exception&) {
    throw InputError(std::string(flag) + ": malformed vector '" + text + "'");
  }
  if (v.size() != d || !vec::is_nonneg(v))
    throw InputError(std::string(flag) + ": expected " + std::to_string(d) + " non-negative counters");
  return v;
}

// Decision procedures take separated machines; separation keeps the
// original state ids.
Machine prepared(const Machine& m) {
  if (!m.is_bidirected()) throw PreconditionError("the machine is not bidirected");
  return m.is_separated() ? m : model::separate_counter_stack(m);
}

int one_dim(const Command& c, std::ostream& report, std::ostream& log) {
  Machine original = load(c);
  if (original.dimension() != 1) throw PreconditionError("'" + c.name + "' needs a one-counter machine");
  StateId p = state_arg(original, c.from, "--from");
  StateId q = state_arg(original, c.to, "--to");
  Machine m = prepared(original);
  if (m.state_count() != original.state_count())
    log << "separated counter and stack steps: " << m.state_count() - original.state_count() << " fresh states\n";
  onedim::OneDim od(m, {c.maxLevel});
  const auto& g = od.saturation().table().at(p, q);
  if (c.name == "cover") {
    report << "verdict=" << (od.cover(p, q) ? "COVER" : "NONCOVER") << '\n';
    auto first = od.first_cover_level(p, q);
    report << "first_level=" << (first ? std::to_string(*first) : "-") << '\n';
  } else if (c.name == "zreach") {
    report << "verdict=" << (od.zreach(p, q) ? "ZREACH" : "NONZREACH") << '\n';
  } else {
    report << "verdict=" << (od.reach(p, q) ? "REACH" : "NONREACH") << '\n';
    report << "cover_forward=" << od.cover(p, q) << '\n';
    report << "cover_backward=" << od.cover(q, p) << '\n';
    report << "zreach=" << od.zreach(p, q) << '\n';
  }
  report << "from=" << c.from << "\nto=" << c.to << '\n';
  report << "states=" << m.state_count() << '\n';
  report << "levels=" << od.saturation().converged_level() << '\n';
  report << "gamma_a=" << g.a.to_string() << "\ngamma_b=" << g.b.to_string() << '\n';
  report << "weights=" << od.weights(p, q).to_string() << '\n';
  if (c.trace) onedim::write_trace(report, m, od.saturation());
  return kOk;
}

int reach(const Command& c, std::ostream& report, std::ostream& log) {
  Machine original = load(c);
  StateId p = state_arg(original, c.from, "--from");
  StateId q = state_arg(original, c.to, "--to");
  Vec s = counters_arg(c.fromCounters, original.dimension(), "--from-counters");
  Vec t = counters_arg(c.toCounters, original.dimension(), "--to-counters");
  if (!original.is_bidirected()) throw PreconditionError("the machine is not bidirected");
  auto query = sat::encode_query(original, p, s, q, t);
  log << "PVAS dimension " << query.pvas.dimension() << ", " << query.pvas.transitions().size() << " transitions\n";
  auto state = sat::saturate(query.pvas, {c.maxLevel});
  bool yes = state.basis.member(query.source, query.target);
  report << "verdict=" << (yes ? "REACH" : "NONREACH") << '\n';
  report << "from=" << c.from << "\nto=" << c.to << '\n';
  report << "from_counters=" << vec::to_string(s) << "\nto_counters=" << vec::to_string(t) << '\n';
  report << "pvas_dimension=" << query.pvas.dimension() << '\n';
  report << "levels=" << state.level << '\n';
  report << "generators=" << state.basis.pairs().size() << '\n';
  report << "components=" << state.relation.components().size() << '\n';
  if (c.trace) sat::write_chain(report, state.chain);
  return kOk;
}

int oracle(const Command& c, std::ostream& report, std::ostream&) {
  Machine m = load(c);
  StateId p = state_arg(m, c.from, "--from");
  StateId q = state_arg(m, c.to, "--to");
  Vec s = counters_arg(c.fromCounters, m.dimension(), "--from-counters");
  Vec t = counters_arg(c.toCounters, m.dimension(), "--to-counters");
  explore::Bounds b;
  b.counterMax = c.counterMax;
  b.stackMax = c.stackMax;
  b.nodeMax = c.nodeMax;
  if (c.mode == "int")
    b.mode = explore::Mode::Int;
  else if (c.mode != "nat")
    throw InputError("--mode must be 'nat' or 'int'");
  auto v = explore::bounded_reach(m, {p, s, {}}, explore::Target::exactly(q, t), b);
  report << "verdict=" << (v.reached ? "REACHED" : "EXHAUSTED") << '\n';
  report << "witness_length=" << (v.reached ? std::to_string(v.witness.size()) : "-") << '\n';
  v.stats.write(report);
  if (c.trace && v.reached) {
    auto path = explore::replay(m, {p, s, {}}, v.witness, b.mode);
    report << "step\ttransition\tstate\tcounters\tstack\n";
    for (std::size_t i = 0; path && i < path->size(); ++i) {
      const auto& conf = (*path)[i];
      report << i << '\t' << (i == 0 ? std::string("-") : std::to_string(v.witness[i - 1])) << '\t'
             << m.states()[conf.state] << '\t' << vec::to_string(conf.counters) << '\t';
      for (std::size_t k = 0; k < conf.stack.size(); ++k) report << (k ? " " : "") << m.alphabet()[conf.stack[k]];
      report << '\n';
    }
  }
  return kOk;
}

int cong_command(const Command& c, std::ostream& report, std::ostream& log) {
  auto text = io::parse_basis(read_input(c));
  cong::CongruenceBasis basis(text.dimension, text.pairs);
  auto bv = cong::big_vector(basis);
  cong::ConversionStats stats;
  auto rel = cong::cong_to_semilinear(basis, &stats);
  log << "regions " << stats.regions << ", squarings " << stats.squarings << '\n';
  if (!c.pair.empty()) {
    auto semi = c.pair.find(';');
    if (semi == std::string::npos) throw InputError("--pair must look like 's;t'");
    Vec s = counters_arg(c.pair.substr(0, semi), text.dimension, "--pair");
    Vec t = counters_arg(c.pair.substr(semi + 1), text.dimension, "--pair");
    bool by_gb = basis.member(s, t);
    bool by_set = rel.member(s, t);
    if (by_gb != by_set) throw Error("semilinear form and Groebner basis disagree on the pair");
    report << "verdict=" << (by_gb ? "MEMBER" : "NONMEMBER") << '\n';
  } else {
    report << "verdict=CONVERTED\n";
  }
  report << "dimension=" << text.dimension << '\n';
  report << "generators=" << basis.pairs().size() << '\n';
  report << "groebner=" << basis.groebner().elements().size() << '\n';
  report << "b=" << vec::to_string(bv.b) << '\n';
  report << "bound_b=" << vec::to_string(bv.boundB) << '\n';
  report << "lambda=" << bv.lambda << '\n';
  report << "M=";
  for (std::size_t i = 0; i < bv.M.size(); ++i)
    report << (i ? " " : "") << vec::to_string(bv.M[i].first) << ';' << vec::to_string(bv.M[i].second);
  report << '\n';
  report << "regions=" << stats.regions << '\n';
  report << "components=" << rel.components().size() << '\n';
  if (c.trace) report << semilinear::to_text(rel);
  return kOk;
}

int gen(const Command& c, std::ostream& report, std::ostream&) {
  Machine m = [&] {
    if (c.family == "valley") return gen::valley(c.bits);
    if (c.family == "random") {
      gen::RandomSpec spec;
      spec.seed = c.seed;
      spec.states = c.states;
      spec.symbols = c.symbols;
      spec.transitions = c.transitions;
      spec.maxEffect = c.maxEffect;
      spec.dimension = c.dimension;
      return gen::random_machine(spec);
    }
    throw InputError("--family must be 'valley' or 'random'");
  }();
  std::string text = io::serialize_machine(m);
  if (c.output.empty()) {
    report << text;
    return kOk;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + c.output + "'");
  report << "verdict=WRITTEN\noutput=" << c.output << "\nstates=" << m.state_count()
         << "\ntransitions=" << m.transitions().size() << '\n';
  return kOk;
}

int info(const Command& c, std::ostream& report, std::ostream&) {
  Machine m = load(c);
  report << "dimension=" << m.dimension() << '\n';
  report << "states=" << m.state_count() << '\n';
  report << "alphabet=" << m.alphabet().size() << '\n';
  report << "transitions=" << m.transitions().size() << '\n';
  report << "bidirected=" << m.is_bidirected() << '\n';
  report << "separated=" << m.is_separated() << '\n';
  report << "max_abs_effect=" << m.max_abs_effect() << '\n';
  return kOk;
}

}  // namespace

int run_command(const Command& c, std::ostream& report, std::ostream& log) {
  try {
    if (c.name == "reach1d" || c.name == "cover" || c.name == "zreach") return one_dim(c, report, log);
    if (c.name == "reach") return reach(c, report, log);
    if (c.name == "oracle") return oracle(c, report, log);
    if (c.name == "cong") return cong_command(c, report, log);
    if (c.name == "gen") return gen(c, report, log);
    if (c.name == "info") return info(c, report, log);
    log << "error: unknown command '" << c.name << "'\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    log << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    log << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    log << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    log << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    log << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace pdvass::cli
