#include <iostream>

#include "CLI11.hpp"
#include "pdvass/commands.hpp"

namespace {

using pdvass::cli::Command;

void machine_flags(CLI::App* sub, Command& c, bool states) {
  sub->add_option("--input", c.input, "instance file")->required();
  if (states) {
    sub->add_option("--from", c.from, "source state")->required();
    sub->add_option("--to", c.to, "target state")->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for bidirected pushdown VASS"};
  app.require_subcommand(1);
  Command c;

  for (const char* name : {"reach1d", "cover", "zreach"}) {
    auto* sub = app.add_subcommand(name, std::string("one-counter ") + name);
    machine_flags(sub, c, true);
    sub->add_option("--max-level", c.maxLevel, "summary saturation level cap");
    sub->add_flag("--trace", c.trace, "append the per-level summary table");
  }

  auto* reach = app.add_subcommand("reach", "reachability by congruence saturation");
  machine_flags(reach, c, true);
  reach->add_option("--from-counters", c.fromCounters, "source counters, e.g. 1,0");
  reach->add_option("--to-counters", c.toCounters, "target counters");
  reach->add_option("--max-level", c.maxLevel, "saturation level cap");
  reach->add_flag("--trace", c.trace, "append the congruence chain");

  auto* oracle = app.add_subcommand("oracle", "bounded explicit search");
  machine_flags(oracle, c, true);
  oracle->add_option("--from-counters", c.fromCounters, "source counters");
  oracle->add_option("--to-counters", c.toCounters, "target counters");
  oracle->add_option("--counter-max", c.counterMax, "counter bound");
  oracle->add_option("--stack-max", c.stackMax, "stack height bound");
  oracle->add_option("--node-max", c.nodeMax, "visited configuration cap");
  oracle->add_option("--mode", c.mode, "nat or int")->check(CLI::IsMember({"nat", "int"}));
  oracle->add_flag("--trace", c.trace, "append the witness run");

  auto* cong = app.add_subcommand("cong", "congruence to semilinear conversion");
  cong->add_option("--input", c.input, "basis file")->required();
  cong->add_option("--pair", c.pair, "membership query 's;t'");
  cong->add_flag("--trace", c.trace, "append the semilinear relation");

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("--family", c.family, "valley or random")->check(CLI::IsMember({"valley", "random"}));
  gen->add_option("--bits", c.bits, "valley: counter width")->check(CLI::PositiveNumber);
  gen->add_option("--seed", c.seed, "random: seed");
  gen->add_option("--states", c.states, "random: states")->check(CLI::PositiveNumber);
  gen->add_option("--symbols", c.symbols, "random: stack symbols");
  gen->add_option("--transitions", c.transitions, "random: transitions before closure");
  gen->add_option("--max-effect", c.maxEffect, "random: largest absolute effect")->check(CLI::NonNegativeNumber);
  gen->add_option("--dimension", c.dimension, "random: counters")->check(CLI::PositiveNumber);
  gen->add_option("--output", c.output, "write here instead of stdout");

  auto* info = app.add_subcommand("info", "instance statistics");
  machine_flags(info, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : pdvass::cli::kInputError;
  }
  c.name = app.get_subcommands().front()->get_name();
  return pdvass::cli::run_command(c, std::cout, std::cerr);
}
