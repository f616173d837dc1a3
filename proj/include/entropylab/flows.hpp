#ifndef ENTROPYLAB_FLOWS_HPP
#define ENTROPYLAB_FLOWS_HPP

#include <vector>

#include "entropylab/functionals.hpp"
#include "entropylab/grid_density.hpp"
#include "entropylab/orders.hpp"
#include "entropylab/types.hpp"

// Explicit conservative integration of the nonlinear diffusion family
//
//   d/dt u = A(u) Lap(u^p),   A(u) = exp((p - q) R_p(u)),
//
// which is the heat equation at (p, q) = (1, 1), the order-p nonlinear
// diffusion at q = p (A == 1 exactly; no exponentials are evaluated), and
// the entropy-adapted reparametrizations otherwise. The scheme is the
// standard monotone flux form on a uniform grid with zero-flux walls:
// discrete mass is conserved to roundoff and ordered states stay ordered
// under the CFL bound, which also yields positivity.
namespace entropylab {

enum class FlowKind { Heat, PorousMedium, Renyi, SharmaMittal };

enum class Schedule { Geometric, Uniform };

struct DtPolicy {
  enum class Mode { CflFraction, Fixed };
  Mode mode = Mode::CflFraction;
  // CflFraction: fraction of the monotonicity bound (0, 1]; Fixed: dt.
  Real value = 0.4;
};

struct FlowSpec {
  FlowKind kind = FlowKind::Heat;
  Real p = 1.0;  // ignored for Heat
  Real q = 1.0;  // only read for SharmaMittal
  Real t_start = 0.0;
  Real t_end = 1.0;
  DtPolicy dt;
  int snapshot_count = 64;
  Schedule schedule = Schedule::Geometric;
  // Geometric schedules: first gap >= this fraction of the span (smaller
  // gaps amplify roundoff in second differences downstream).
  Real min_first_gap_fraction = 2e-3;
  // Relative positivity floor applied to the initial data (0 = off).
  Real positivity_floor = 0.0;
  long max_steps = 400000000L;

  // Orders the flow actually integrates; kind resolves the aliases
  // Heat = (1, 1), PorousMedium(p) = (p, p), Renyi(p) = (p, 1).
  Real effective_p() const;
  Real effective_q() const;

  void validate() const;
};

// Snapshot times for the spec (snapshot_count points from t_start to t_end
// inclusive; geometric gaps honoring min_first_gap_fraction).
std::vector<Real> snapshot_times(const FlowSpec& spec);

struct Trajectory {
  Trajectory(FlowSpec s, Orders o) : spec(s), orders(o) {}

  FlowSpec spec;
  Orders orders;           // effective (p, q, d) of the run
  std::vector<Real> times;
  std::vector<GridDensity> states;         // renormalized at each snapshot
  std::vector<Real> raw_mass;              // solver-grid mass before renorm
  std::vector<Real> reparam_tau;           // tau(t) = integral of A dt
  std::vector<FunctionalSnapshot> snapshots;
  long total_steps = 0;
  Real max_dt = 0.0;  // largest step taken (transient-exclusion window)
};

// Core integrator; u0's geometry fixes the ambient dimension.
Trajectory solve_flow(const GridDensity& u0, const FlowSpec& spec);

// Order-p nonlinear diffusion d/dt u = Lap(u^p) (heat equation at p = 1).
Trajectory solve_pme(const GridDensity& u0, Real p, FlowSpec spec);

// Two-parameter flow d/dt u = exp((p - q) R_p(u)) Lap(u^p).
Trajectory solve_sm_flow(const GridDensity& u0, const Orders& o, FlowSpec spec);

// Largest dt keeping the update monotone for the current state (A included).
Real max_stable_dt(const GridDensity& u, Real p, Real prefactor);

namespace detail {

// One explicit step of du/dt = prefactor * Lap(u^p) on raw values.
// No validation: exposed for scheme-property tests (monotonicity,
// comparison principle) that need non-normalized states.
ArrayX flow_step(const ArrayX& u, Real p, Real prefactor, Real dt, Real h,
                 Geometry geometry, int dim);

}  // namespace detail

}  // namespace entropylab

#endif  // ENTROPYLAB_FLOWS_HPP
