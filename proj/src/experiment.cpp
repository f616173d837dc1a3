#include "entropylab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include "entropylab/checks.hpp"
#include "entropylab/epi.hpp"
#include "entropylab/errors.hpp"
#include "entropylab/flows.hpp"
#include "entropylab/reference_densities.hpp"
#include "entropylab/report_io.hpp"

namespace entropylab {

namespace fs = std::filesystem;

Command parse_command(const std::string& name) {
  if (name == "flow") return Command::Flow;
  if (name == "concavity") return Command::Concavity;
  if (name == "epi") return Command::Epi;
  if (name == "sweep") return Command::Sweep;
  if (name == "functionals") return Command::Functionals;
  throw ConfigError("unknown command '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Flow: return "flow";
    case Command::Concavity: return "concavity";
    case Command::Epi: return "epi";
    case Command::Sweep: return "sweep";
    case Command::Functionals: return "functionals";
  }
  return "?";
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Real to_real(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const Real v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": expected a number, got '" + text + "'");
  }
}

std::vector<MixtureComponent> parse_mixture(const std::string& text) {
  std::vector<MixtureComponent> parts;
  for (const std::string& item : split(text, ';')) {
    if (item.empty()) continue;
    const auto fields = split(item, ':');
    if (fields.size() != 3)
      throw ConfigError("mixture component '" + item +
                        "': expected weight:center:sigma2");
    parts.push_back(MixtureComponent{to_real(fields[0], "mixture weight"),
                                     to_real(fields[1], "mixture center"),
                                     to_real(fields[2], "mixture sigma2")});
  }
  if (parts.empty()) throw ConfigError("mixture: no components");
  return parts;
}

void consume_order_keys(ExperimentConfig& e, ConfigMap& cfg) {
  const bool has_p = cfg.has("p");
  const bool has_q = cfg.has("q");
  e.kind = cfg.get_string("kind", e.kind);
  e.p = cfg.get_real("p", e.p);
  e.q = cfg.get_real("q", e.q);
  if (e.kind == "heat") {
    if ((has_p && e.p != 1.0) || (has_q && e.q != 1.0))
      throw ConfigError("kind heat fixes p = q = 1");
    e.p = 1.0;
    e.q = 1.0;
  } else if (e.kind == "pme") {
    if (has_q && e.q != e.p)
      throw ConfigError("kind pme fixes q = p");
    e.q = e.p;
  } else if (e.kind == "renyi") {
    if (has_q && e.q != 1.0)
      throw ConfigError("kind renyi fixes q = 1");
    e.q = 1.0;
  } else if (e.kind != "sm") {
    throw ConfigError("kind must be heat, pme, renyi, or sm, got '" + e.kind +
                      "'");
  }
}

void consume_flow_keys(ExperimentConfig& e, ConfigMap& cfg) {
  e.d = static_cast<int>(cfg.get_int("d", e.d));
  e.geometry = cfg.get_string("geometry", e.geometry);
  if (e.geometry != "line" && e.geometry != "radial")
    throw ConfigError("geometry must be line or radial, got '" + e.geometry +
                      "'");
  e.n = cfg.get_int("n", e.n);
  e.half_width = cfg.get_real("half_width", e.half_width);
  e.t_start = cfg.get_real("t_start", e.t_start);
  e.t_end = cfg.get_real("t_end", e.t_end);
  e.snapshots = cfg.get_int("snapshots", e.snapshots);
  e.schedule = cfg.get_string("schedule", e.schedule);
  if (e.schedule != "geometric" && e.schedule != "uniform")
    throw ConfigError("schedule must be geometric or uniform, got '" +
                      e.schedule + "'");
  const bool has_dt = cfg.has("dt");
  const bool has_cfl = cfg.has("cfl");
  if (has_dt && has_cfl)
    throw ConfigError("give either cfl or dt, not both");
  e.cfl = cfg.get_real("cfl", e.cfl);
  if (has_dt) e.fixed_dt = cfg.get_real("dt", 0.0);
  if (cfg.has("floor")) e.floor = cfg.get_real("floor", 0.0);
  e.min_gap_fraction = cfg.get_real("min_gap_fraction", e.min_gap_fraction);
}

void consume_init_keys(ExperimentConfig& e, ConfigMap& cfg) {
  e.init = cfg.get_string("init", e.init);
  e.sigma2 = cfg.get_real("sigma2", e.sigma2);
  e.center = cfg.get_real("center", e.center);
  e.width = cfg.get_real("width", e.width);
  e.barenblatt_t0 = cfg.get_real("barenblatt_t0", e.barenblatt_t0);
  e.mixture = cfg.get_string("mixture", e.mixture);
  if (e.init != "gaussian" && e.init != "uniform" && e.init != "mixture" &&
      e.init != "barenblatt")
    throw ConfigError(
        "init must be gaussian, uniform, mixture, or barenblatt, got '" +
        e.init + "'");
}

void consume_check_keys(ExperimentConfig& e, ConfigMap& cfg) {
  e.tol_identity = cfg.get_real("tol_identity", e.tol_identity);
  e.tol_concavity = cfg.get_real("tol_concavity", e.tol_concavity);
  e.tol_concavity_rel = cfg.get_real("tol_concavity_rel", e.tol_concavity_rel);
  e.tol_inequality = cfg.get_real("tol_inequality", e.tol_inequality);
  e.tol_heat = cfg.get_real("tol_heat", e.tol_heat);
  e.tol_dilation = cfg.get_real("tol_dilation", e.tol_dilation);
}

Real resolved_floor(const ExperimentConfig& e, Real p) {
  if (e.floor) return *e.floor;
  return p < 1.0 ? 1e-3 : 0.0;
}

GridDensity build_initial(const ExperimentConfig& e, Real p) {
  const bool line = e.geometry == "line";
  if (line && e.d != 1)
    throw ConfigError("line geometry requires d = 1");
  if (e.init == "gaussian") {
    if (line) return gaussian_line(e.sigma2, e.half_width, e.n, e.center);
    return gaussian_radial(e.sigma2, e.d, e.half_width, e.n);
  }
  if (e.init == "uniform") {
    if (e.width <= 0) throw ConfigError("uniform init needs width > 0");
    if (e.width >= 2 * e.half_width)
      throw ConfigError("uniform init width must fit inside the grid");
    const Real h = line ? 2 * e.half_width / static_cast<Real>(e.n - 1)
                        : e.half_width / static_cast<Real>(e.n - 1);
    const Real x0 = line ? -e.half_width : 0.0;
    ArrayX values(e.n);
    for (Index i = 0; i < e.n; ++i) {
      const Real x = x0 + static_cast<Real>(i) * h;
      values[i] = std::abs(x - (line ? e.center : 0.0)) <= e.width / 2
                      ? 1.0
                      : 0.0;
    }
    return GridDensity(line ? Geometry::Line1D : Geometry::Radial, e.d, x0, h,
                       values);
  }
  if (e.init == "mixture") {
    if (!line) throw ConfigError("mixture init is line-only");
    return gaussian_mixture_line(parse_mixture(e.mixture), e.half_width, e.n);
  }
  // barenblatt
  if (e.barenblatt_t0 <= 0)
    throw ConfigError("barenblatt init needs barenblatt_t0 > 0");
  if (line) return self_similar_line(p, e.barenblatt_t0, e.half_width, e.n);
  return self_similar_radial(p, e.d, e.barenblatt_t0, e.half_width, e.n);
}

FlowKind parse_kind(const std::string& kind) {
  if (kind == "heat") return FlowKind::Heat;
  if (kind == "pme") return FlowKind::PorousMedium;
  if (kind == "renyi") return FlowKind::Renyi;
  return FlowKind::SharmaMittal;
}

FlowSpec build_flow_spec(const ExperimentConfig& e) {
  FlowSpec spec;
  spec.kind = parse_kind(e.kind);
  spec.p = e.p;
  spec.q = e.q;
  spec.t_start = e.t_start;
  spec.t_end = e.t_end;
  if (e.fixed_dt) {
    spec.dt.mode = DtPolicy::Mode::Fixed;
    spec.dt.value = *e.fixed_dt;
  } else {
    spec.dt.mode = DtPolicy::Mode::CflFraction;
    spec.dt.value = e.cfl;
  }
  spec.snapshot_count = static_cast<int>(e.snapshots);
  spec.schedule =
      e.schedule == "uniform" ? Schedule::Uniform : Schedule::Geometric;
  spec.min_first_gap_fraction = e.min_gap_fraction;
  spec.positivity_floor = resolved_floor(e, spec.effective_p());
  return spec;
}

// ---- artifact plumbing ----------------------------------------------------

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

void write_json(const fs::path& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

Json config_echo(const ExperimentConfig& e) {
  Json j;
  j["command"] = to_string(e.command);
  j["seed"] = e.seed;
  switch (e.command) {
    case Command::Flow:
    case Command::Concavity:
    case Command::Sweep: {
      if (e.command == Command::Sweep) {
        Json pg = Json::array();
        for (Real v : e.p_grid) pg.push_back(format_real(v));
        Json qg = Json::array();
        for (Real v : e.q_grid) qg.push_back(format_real(v));
        j["p_grid"] = pg;
        j["q_grid"] = qg;
      } else {
        j["kind"] = e.kind;
        j["p"] = format_real(e.p);
        j["q"] = format_real(e.q);
      }
      j["d"] = e.d;
      j["geometry"] = e.geometry;
      j["n"] = e.n;
      j["half_width"] = format_real(e.half_width);
      j["t_start"] = format_real(e.t_start);
      j["t_end"] = format_real(e.t_end);
      j["snapshots"] = e.snapshots;
      j["schedule"] = e.schedule;
      if (e.fixed_dt)
        j["dt"] = format_real(*e.fixed_dt);
      else
        j["cfl"] = format_real(e.cfl);
      if (e.floor) j["floor"] = format_real(*e.floor);
      j["min_gap_fraction"] = format_real(e.min_gap_fraction);
      j["init"] = e.init;
      if (e.init == "gaussian") {
        j["sigma2"] = format_real(e.sigma2);
        j["center"] = format_real(e.center);
      } else if (e.init == "uniform") {
        j["width"] = format_real(e.width);
      } else if (e.init == "mixture") {
        j["mixture"] = e.mixture;
      } else {
        j["barenblatt_t0"] = format_real(e.barenblatt_t0);
      }
      if (e.command != Command::Flow) {
        j["tol_identity"] = format_real(e.tol_identity);
        j["tol_concavity"] = format_real(e.tol_concavity);
        j["tol_concavity_rel"] = format_real(e.tol_concavity_rel);
        j["tol_inequality"] = format_real(e.tol_inequality);
        j["tol_heat"] = format_real(e.tol_heat);
        j["tol_dilation"] = format_real(e.tol_dilation);
      }
      break;
    }
    case Command::Epi:
      j["variant"] = e.variant;
      j["p"] = format_real(e.p);
      j["q"] = format_real(e.q);
      if (e.alpha) j["alpha"] = format_real(*e.alpha);
      j["summands"] = e.summands;
      j["n"] = e.n;
      j["half_width"] = format_real(e.half_width);
      j["tol_epi"] = format_real(e.tol_epi);
      break;
    case Command::Functionals:
      j["p"] = format_real(e.p);
      j["q"] = format_real(e.q);
      j["d"] = e.d;
      j["geometry"] = e.geometry;
      j["n"] = e.n;
      j["half_width"] = format_real(e.half_width);
      j["init"] = e.init;
      j["sigma2"] = format_real(e.sigma2);
      break;
  }
  return j;
}

struct ManifestBuilder {
  Json checks = Json::array();
  Json artifacts = Json::array();
  Json skipped = Json::array();
  bool all_pass = true;

  void add_artifact(const std::string& name) { artifacts.push_back(name); }
  void add_check(const std::string& id, bool pass, bool gating,
                 const std::string& artifact) {
    Json j;
    j["id"] = id;
    j["pass"] = pass;
    j["gating"] = gating;
    j["artifact"] = artifact;
    checks.push_back(j);
    if (gating && !pass) all_pass = false;
  }
  void skip(const std::string& id, const std::string& why) {
    Json j;
    j["id"] = id;
    j["reason"] = why;
    skipped.push_back(j);
  }

  void write(const ExperimentConfig& e) const {
    Json m;
    m["command"] = to_string(e.command);
    m["config"] = config_echo(e);
    m["artifacts"] = artifacts;
    m["checks"] = checks;
    if (!skipped.empty()) m["skipped_checks"] = skipped;
    m["all_pass"] = all_pass;
    write_json(fs::path(e.out_dir) / "manifest.json", m);
  }
};

void write_state(const fs::path& path, const GridDensity& u) {
  std::ostringstream os;
  write_state_csv(os, u);
  write_text(path, os.str());
}

void write_trajectory(const fs::path& path, const Trajectory& traj) {
  std::ostringstream os;
  write_trajectory_csv(os, traj);
  write_text(path, os.str());
}

// ---- runners --------------------------------------------------------------

int run_flow(const ExperimentConfig& e) {
  const FlowSpec spec = build_flow_spec(e);
  const GridDensity u0 = build_initial(e, spec.effective_p());
  const Trajectory traj = solve_flow(u0, spec);

  const fs::path dir(e.out_dir);
  ManifestBuilder m;
  write_trajectory(dir / "trajectory.csv", traj);
  m.add_artifact("trajectory.csv");
  write_state(dir / "state_initial.csv", traj.states.front());
  m.add_artifact("state_initial.csv");
  write_state(dir / "state_final.csv", traj.states.back());
  m.add_artifact("state_final.csv");
  m.write(e);
  return 0;
}

int run_concavity(const ExperimentConfig& e) {
  const FlowSpec spec = build_flow_spec(e);
  const GridDensity u0 = build_initial(e, spec.effective_p());
  const Orders orders(spec.effective_p(), spec.effective_q(), e.d);
  const Trajectory traj = solve_flow(u0, spec);

  std::vector<CheckReport> reports;
  ManifestBuilder m;
  if (orders.p > 0.5) {
    auto [prod_e, prod_i] =
        check_production_identities(traj, orders, e.tol_identity);
    reports.push_back(std::move(prod_e));
    reports.push_back(std::move(prod_i));
    // p = 1 is the equality case of the key inequality, so its discrete
    // margin sits at quadrature noise; widen the gate to the noise scale.
    const Real key_tol = orders.shannon_limit_p()
                             ? std::max(e.tol_inequality, 1e-4)
                             : e.tol_inequality;
    reports.push_back(check_key_inequality(traj, orders, key_tol));
  } else {
    m.skip("ProdE", "I_p needs p > 1/2");
    m.skip("ProdI", "J_p needs p > 1/2");
    m.skip("KeyIneq", "I_p needs p > 1/2");
  }
  reports.push_back(
      check_concavity(traj, orders, e.tol_concavity, e.tol_concavity_rel));
  reports.push_back(check_concavity_condition(traj, orders, e.tol_concavity,
                                              e.tol_concavity_rel));
  reports.push_back(check_dilation_invariance(
      traj.states.front(), orders, {0.5, 2.0, 5.0}, e.tol_dilation));
  if (orders.shannon_limit_p() && orders.renyi_limit_q() &&
      spec.schedule == Schedule::Uniform) {
    reports.push_back(check_heat_affinity(traj, e.tol_heat));
  } else if (orders.shannon_limit_p() && orders.renyi_limit_q()) {
    m.skip("LinearHeatN", "needs schedule = uniform");
  }

  const fs::path dir(e.out_dir);
  write_trajectory(dir / "trajectory.csv", traj);
  m.add_artifact("trajectory.csv");
  write_state(dir / "state_initial.csv", traj.states.front());
  m.add_artifact("state_initial.csv");
  write_state(dir / "state_final.csv", traj.states.back());
  m.add_artifact("state_final.csv");

  Json arr = Json::array();
  for (const CheckReport& r : reports) arr.push_back(to_json(r));
  write_json(dir / "checks.json", arr);
  m.add_artifact("checks.json");
  for (const CheckReport& r : reports)
    m.add_check(to_string(r.id), r.pass, true, "checks.json");
  m.write(e);
  return m.all_pass ? 0 : 3;
}

int run_functionals(const ExperimentConfig& e) {
  const Orders orders(e.p, e.q, e.d);
  const GridDensity u = build_initial(e, e.p);
  const FunctionalSnapshot snap = evaluate_snapshot(u, orders);

  const fs::path dir(e.out_dir);
  ManifestBuilder m;
  write_json(dir / "functionals.json", to_json(snap, orders));
  m.add_artifact("functionals.json");
  write_state(dir / "state.csv", u);
  m.add_artifact("state.csv");
  m.write(e);
  return 0;
}

int run_epi(const ExperimentConfig& e) {
  if (e.n < 2) throw ConfigError("epi needs n >= 2");
  const Real h = 2 * e.half_width / static_cast<Real>(e.n - 1);
  std::vector<GridDensity> summands;
  for (const std::string& item : split(e.summands, ';')) {
    if (item.empty()) continue;
    const auto fields = split(item, ':');
    if (fields.size() != 2)
      throw ConfigError("summand '" + item + "': expected family:param");
    const Real param = to_real(fields[1], "summand parameter");
    if (fields[0] == "gaussian") {
      summands.push_back(gaussian_line(param, e.half_width, e.n));
    } else if (fields[0] == "uniform") {
      if (param <= 0) throw ConfigError("uniform summand needs width > 0");
      const Real cells = param / h;
      const auto m = static_cast<Index>(std::lround(cells));
      if (m < 1 || std::abs(static_cast<Real>(m) - cells) > 1e-9)
        throw ConfigError(
            "uniform summand width must be a multiple of the grid spacing "
            "2 * half_width / (n - 1)");
      summands.push_back(uniform_line(-param / 2, param, m + 1));
    } else {
      throw ConfigError("summand family must be gaussian or uniform, got '" +
                        fields[0] + "'");
    }
  }

  EpiReport rep = [&] {
    if (e.variant == "shannon")
      return check_epi(EpiCase::shannon(std::move(summands)), e.tol_epi);
    if (e.variant == "bm") {
      const Real a = e.alpha ? *e.alpha : (e.p + 1) / 2;
      return check_epi(
          EpiCase::bobkov_marsiglietti(e.p, a, std::move(summands)),
          e.tol_epi);
    }
    if (e.variant == "sm") {
      Real q = e.q;
      if (e.alpha) q = 2 * (*e.alpha - 1) + 1;
      return check_epi(
          EpiCase::sharma_mittal(Orders(e.p, q, 1), std::move(summands)),
          e.tol_epi);
    }
    if (e.variant == "bc")
      return check_epi(EpiCase::bobkov_chistyakov(e.p, std::move(summands)),
                       e.tol_epi);
    throw ConfigError("variant must be shannon, bm, sm, or bc, got '" +
                      e.variant + "'");
  }();

  const fs::path dir(e.out_dir);
  ManifestBuilder m;
  write_json(dir / "epi.json", to_json(rep));
  m.add_artifact("epi.json");
  m.add_check(to_string(rep.variant), rep.pass, !rep.exploratory, "epi.json");
  m.write(e);
  return m.all_pass ? 0 : 3;
}

// One sweep cell: solve the two-parameter flow and run the trajectory
// checks. Failures of any kind are captured in the row so the sweep can
// keep going.
struct SweepCell {
  Real p = 0;
  Real q = 0;
  std::string status = "ok";
  std::vector<CheckReport> reports;
  std::optional<Real> concavity_margin;
  std::optional<Real> key_margin;
  std::optional<bool> agrees;
  bool pass = false;
};

SweepCell run_sweep_cell(const ExperimentConfig& e, Real p, Real q) {
  SweepCell cell;
  cell.p = p;
  cell.q = q;
  try {
    const Orders orders(p, q, e.d);
    ExperimentConfig local = e;
    local.kind = "sm";
    local.p = p;
    local.q = q;
    FlowSpec spec = build_flow_spec(local);
    const GridDensity u0 = build_initial(local, p);
    const Trajectory traj = solve_flow(u0, spec);

    CheckReport conc =
        check_concavity(traj, orders, e.tol_concavity, e.tol_concavity_rel);
    CheckReport cond = check_concavity_condition(traj, orders, e.tol_concavity,
                                                 e.tol_concavity_rel);
    cell.concavity_margin = conc.margin_min;
    cell.agrees = conc.agrees_with_condition;
    cell.pass = conc.pass && cond.pass;
    if (orders.p > 0.5) {
      CheckReport key = check_key_inequality(traj, orders, e.tol_inequality);
      cell.key_margin = key.margin_min;
      cell.pass = cell.pass && key.pass;
      cell.reports.push_back(std::move(key));
    }
    cell.reports.push_back(std::move(conc));
    cell.reports.push_back(std::move(cond));
  } catch (const NumericalError& ex) {
    cell.status = std::string("numerical abort: ") + ex.what();
    cell.pass = false;
  } catch (const std::exception& ex) {
    cell.status = std::string("error: ") + ex.what();
    cell.pass = false;
  }
  return cell;
}

std::size_t worker_count(std::size_t jobs) {
  long requested = 0;
  if (const char* env = std::getenv("ENTROPY_LAB_THREADS"))
    requested = std::strtol(env, nullptr, 10);
  if (requested <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    requested = hw == 0 ? 1 : static_cast<long>(hw);
  }
  return std::min<std::size_t>(static_cast<std::size_t>(requested),
                               std::max<std::size_t>(jobs, 1));
}

int run_sweep(const ExperimentConfig& e) {
  std::vector<std::pair<Real, Real>> grid;
  for (Real p : e.p_grid)
    for (Real q : e.q_grid) grid.emplace_back(p, q);
  if (grid.empty()) throw ConfigError("sweep needs nonempty p and q grids");

  std::vector<SweepCell> cells(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      cells[i] = run_sweep_cell(e, grid[i].first, grid[i].second);
    }
  };
  const std::size_t threads = worker_count(grid.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Collected in grid order, so the artifacts are thread-count independent.
  const fs::path dir(e.out_dir);
  ManifestBuilder m;
  std::ostringstream csv;
  csv << "p,q,concavity_pass,concavity_margin_min,condition_agrees,"
         "key_margin_min,status\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const SweepCell& cell = cells[i];
    std::string status = cell.status;
    for (char& c : status)
      if (c == ',' || c == '\n') c = ';';
    csv << format_real(cell.p) << ',' << format_real(cell.q) << ','
        << (cell.pass ? "true" : "false") << ','
        << format_real(cell.concavity_margin) << ','
        << (cell.agrees ? (*cell.agrees ? "true" : "false") : "") << ','
        << format_real(cell.key_margin) << ',' << status << '\n';

    if (!cell.reports.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "checks_%03zu.json", i);
      Json arr = Json::array();
      for (const CheckReport& r : cell.reports) arr.push_back(to_json(r));
      write_json(dir / name, arr);
      m.add_artifact(name);
      for (const CheckReport& r : cell.reports)
        m.add_check(to_string(r.id), r.pass, true, name);
    }
    if (cell.status != "ok") m.all_pass = false;
  }
  write_text(dir / "sweep.csv", csv.str());
  m.add_artifact("sweep.csv");
  m.write(e);
  return m.all_pass ? 0 : 3;
}

}  // namespace

ExperimentConfig make_experiment(Command command, ConfigMap& cfg,
                                 const std::string& out_dir, long seed) {
  ExperimentConfig e;
  e.command = command;
  e.out_dir = out_dir;
  e.seed = seed;
  switch (command) {
    case Command::Flow:
      consume_order_keys(e, cfg);
      consume_flow_keys(e, cfg);
      consume_init_keys(e, cfg);
      break;
    case Command::Concavity:
      consume_order_keys(e, cfg);
      consume_flow_keys(e, cfg);
      consume_init_keys(e, cfg);
      consume_check_keys(e, cfg);
      break;
    case Command::Functionals:
      e.p = cfg.get_real("p", e.p);
      e.q = cfg.get_real("q", e.q);
      e.d = static_cast<int>(cfg.get_int("d", e.d));
      e.geometry = cfg.get_string("geometry", e.geometry);
      e.n = cfg.get_int("n", e.n);
      e.half_width = cfg.get_real("half_width", e.half_width);
      consume_init_keys(e, cfg);
      break;
    case Command::Epi:
      e.variant = cfg.get_string("variant", e.variant);
      e.p = cfg.get_real("p", e.p);
      e.q = cfg.get_real("q", e.q);
      if (cfg.has("alpha")) e.alpha = cfg.get_real("alpha", 0.0);
      e.summands = cfg.get_string("summands", e.summands);
      e.n = cfg.get_int("n", 4097);
      e.half_width = cfg.get_real("half_width", e.half_width);
      e.tol_epi = cfg.get_real("tol_epi", e.tol_epi);
      break;
    case Command::Sweep:
      e.p_grid = cfg.get_real_grid("p_grid", "0.6:3:5");
      e.q_grid = cfg.get_real_grid("q_grid", "0.5:3:5");
      consume_flow_keys(e, cfg);
      consume_init_keys(e, cfg);
      consume_check_keys(e, cfg);
      break;
  }
  cfg.require_all_consumed();
  return e;
}

int run_experiment(const ExperimentConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  switch (cfg.command) {
    case Command::Flow: return run_flow(cfg);
    case Command::Concavity: return run_concavity(cfg);
    case Command::Epi: return run_epi(cfg);
    case Command::Sweep: return run_sweep(cfg);
    case Command::Functionals: return run_functionals(cfg);
  }
  throw ConfigError("unhandled command");
}

}  // namespace entropylab
