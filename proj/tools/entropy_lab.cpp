// Command-line front end: evolve nonlinear diffusion flows, evaluate the
// entropy functionals, and verify the concavity / inequality checks.
//
// Exit codes: 0 ok, 2 configuration error, 3 check failure,
// 4 numerical abort (CFL violation or mass leak).
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entropylab/config.hpp"
#include "entropylab/errors.hpp"
#include "entropylab/experiment.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> sets;
  long seed = 0;
};

void attach_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path,
                  "flat key = value config file");
  cmd->add_option("--out", args.out_dir, "output directory")
      ->capture_default_str();
  cmd->add_option("--set", args.sets,
                  "override a config key, KEY=VALUE (repeatable; later wins)");
  cmd->add_option("--seed", args.seed, "seed recorded in the manifest")
      ->capture_default_str();
}

int run(entropylab::Command command, const CommonArgs& args) {
  entropylab::ConfigMap cfg = args.config_path.empty()
                                  ? entropylab::ConfigMap()
                                  : entropylab::ConfigMap::from_file(
                                        args.config_path);
  for (const std::string& kv : args.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw entropylab::ConfigError("--set expects KEY=VALUE, got '" + kv +
                                    "'");
    cfg.set_override(kv.substr(0, eq), kv.substr(eq + 1));
  }
  const entropylab::ExperimentConfig experiment =
      entropylab::make_experiment(command, cfg, args.out_dir, args.seed);
  return entropylab::run_experiment(experiment);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "entropy_lab: generalized entropy powers along nonlinear diffusion "
      "flows"};
  app.require_subcommand(1);

  CommonArgs args;
  entropylab::Command command = entropylab::Command::Flow;

  auto add = [&](const char* name, const char* help, entropylab::Command c) {
    CLI::App* sub = app.add_subcommand(name, help);
    attach_common(sub, args);
    sub->callback([&, c] { command = c; });
    return sub;
  };
  add("flow", "evolve a flow and record the trajectory",
      entropylab::Command::Flow);
  add("concavity", "evolve a flow and verify the entropy-power checks",
      entropylab::Command::Concavity);
  add("epi", "verify an entropy power inequality for independent sums",
      entropylab::Command::Epi);
  add("sweep", "concavity verdicts over a (p, q) grid",
      entropylab::Command::Sweep);
  add("functionals", "evaluate all functionals of one density",
      entropylab::Command::Functionals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(command, args);
  } catch (const entropylab::NumericalError& e) {
    std::fprintf(stderr, "numerical abort: %s\n", e.what());
    return 4;
  } catch (const entropylab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 0;
}
