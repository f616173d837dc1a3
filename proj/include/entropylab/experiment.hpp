#ifndef ENTROPYLAB_EXPERIMENT_HPP
#define ENTROPYLAB_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "entropylab/config.hpp"
#include "entropylab/types.hpp"

// Experiment runners behind the command-line tool. Each command reads a
// flat config, runs the corresponding computation, and writes its
// artifacts (CSV tables, check reports, manifest.json) into the output
// directory. Artifacts are deterministic: rerunning the same config
// produces byte-identical files.
namespace entropylab {

enum class Command { Flow, Concavity, Epi, Sweep, Functionals };

Command parse_command(const std::string& name);
std::string to_string(Command c);

struct ExperimentConfig {
  Command command = Command::Flow;
  std::string out_dir = "out";
  long seed = 0;

  // Flow family.
  std::string kind = "sm";  // heat | pme | renyi | sm
  Real p = 1.0;
  Real q = 1.0;
  int d = 1;
  std::string geometry = "line";  // line | radial
  long n = 2048;
  Real half_width = 8.0;  // radius of the radial grid
  Real t_start = 0.0;
  Real t_end = 1.0;
  long snapshots = 64;
  std::string schedule = "geometric";  // geometric | uniform
  Real cfl = 0.4;
  std::optional<Real> fixed_dt;
  // Relative positivity floor; when unset, fast diffusion (p < 1) gets
  // 1e-3 and everything else runs unfloored.
  std::optional<Real> floor;
  Real min_gap_fraction = 2e-3;

  // Initial data: gaussian | uniform | mixture | barenblatt.
  std::string init = "gaussian";
  Real sigma2 = 1.0;
  Real center = 0.0;
  Real width = 1.0;          // uniform support width (diameter)
  Real barenblatt_t0 = 0.25;
  std::string mixture = "0.5:-2:0.5;0.5:2:1";  // weight:center:sigma2;...

  // Check tolerances.
  Real tol_identity = 5e-2;
  Real tol_concavity = 1e-6;  // factor of max |N_pq| along the run
  Real tol_concavity_rel = 0.0;
  Real tol_inequality = 1e-8;
  Real tol_heat = 1e-3;
  Real tol_dilation = 1e-6;
  Real tol_epi = 1e-6;

  // Entropy power inequality cases.
  std::string variant = "shannon";  // shannon | bm | sm | bc
  std::optional<Real> alpha;
  std::string summands = "gaussian:1;gaussian:1";  // family:param;...

  // Sweep grids ("a,b,c" or "lo:hi:count").
  std::vector<Real> p_grid;
  std::vector<Real> q_grid;
};

// Consumes the keys relevant to the command and rejects everything left
// over, so misspelled keys fail instead of silently using defaults.
ExperimentConfig make_experiment(Command command, ConfigMap& cfg,
                                 const std::string& out_dir, long seed);

// Runs the experiment and writes artifacts under cfg.out_dir. Returns 0
// when every gating check passes and 3 otherwise. Configuration problems
// throw ConfigError or std::invalid_argument; solver aborts throw
// NumericalError. Sweeps are the exception: per-cell failures of any kind
// are recorded in their row and the sweep keeps going.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace entropylab

#endif  // ENTROPYLAB_EXPERIMENT_HPP
