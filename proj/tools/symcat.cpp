#include <CLI11.hpp>
#include <iostream>

#include "symcat/error.hpp"
#include "symcat/scan_io.hpp"

namespace {

using symcat::io::Command;
using symcat::io::ConfigValues;

struct Flag {
  const char* key;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"n", "chain length N"},
    {"n-min", "first N of a scaling range"},
    {"n-max", "last N of a scaling range"},
    {"n-step", "N increment of a scaling range"},
    {"gamma", "anisotropy, or a comma-separated list"},
    {"h-min", "first field value [J]"},
    {"h-max", "last field value [J]"},
    {"h-step", "field increment [J]"},
    {"crossing-step", "coarse grid step of the crossing search [J]"},
    {"tol", "bisection tolerance of the crossing search [J]"},
    {"lambda-max", "lambda grid covers [-max, max]"},
    {"lambda-points", "number of lambda samples"},
    {"lambda-star", "lambda of the N-scaling table"},
    {"state", "xy-symmetric | xy-factorized | xy-cross | xxx-member | xxx-symmetric"},
    {"branch", "+ or - superposition"},
    {"theta", "Bloch angle of the xxx-member state"},
    {"oracle-cap", "largest N the dense oracle accepts"},
    {"points", "random samples per N in oracle-validate"},
    {"seed", "RNG seed of oracle-validate"},
    {"workers", "worker threads"},
    {"out", "output CSV path (stdout when omitted)"},
};

struct SubcommandArgs {
  std::string config;
  std::map<std::string, std::string> flags;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-size XY and XXX chains: crossings, concurrence and generating functions"};
  app.require_subcommand(1);

  constexpr Command kCommands[] = {Command::Fig1,          Command::Fig2,           Command::GenFun,
                                   Command::XyCrossings,   Command::XyConcurrence, Command::XxxConcurrence,
                                   Command::OracleValidate};
  std::map<Command, SubcommandArgs> args;
  std::map<Command, CLI::App*> subs;
  for (Command c : kCommands) {
    auto* sub = app.add_subcommand(std::string(symcat::io::to_string(c)));
    auto& a = args[c];
    sub->add_option("--config", a.config, "key = value file; flags override it");
    for (const auto& f : kFlags) sub->add_option(std::string("--") + f.key, a.flags[f.key], f.help);
    subs[c] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Command cmd = Command::Fig1;
  for (const auto& [c, sub] : subs) {
    if (sub->parsed()) cmd = c;
  }
  const auto& a = args[cmd];

  symcat::io::RunConfig cfg;
  try {
    std::vector<ConfigValues> layers;
    if (!a.config.empty()) layers.push_back(symcat::io::load_config_file(a.config));
    ConfigValues from_flags;
    for (const auto& f : kFlags) {
      if (subs[cmd]->count(std::string("--") + f.key) > 0) from_flags[f.key] = a.flags.at(f.key);
    }
    layers.push_back(std::move(from_flags));
    cfg = symcat::io::resolve_config(cmd, layers);
  } catch (const symcat::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto result = symcat::io::run_command(cfg);
    symcat::io::write_outputs(result, cfg, std::cout);
    if (!result.success) {
      std::cerr << "error: one or more checks failed\n";
      return 1;
    }
  } catch (const symcat::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
