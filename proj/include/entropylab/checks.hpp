#ifndef ENTROPYLAB_CHECKS_HPP
#define ENTROPYLAB_CHECKS_HPP

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entropylab/flows.hpp"
#include "entropylab/grid_density.hpp"
#include "entropylab/orders.hpp"
#include "entropylab/types.hpp"

// Verification of the entropy-power identities and inequalities along
// trajectories. Identities report relative residuals (pass iff
// max_rel_residual <= tol); inequalities report margins (pass iff
// margin_min >= -tol). Time derivatives are taken from the interpolating
// parabola through consecutive snapshots, so geometric schedules lose no
// order; interior samples closer than two solver steps to t_start are
// excluded as initialization transient.
namespace entropylab {

enum class CheckId {
  ProdE,          // -dE_p/dt = A I_p along the two-parameter flow
  ProdI,          // -dI_p/dt = A J_p
  ProdE_PME,      // specialization A == 1 (order-p diffusion)
  ProdI_PME,
  KeyIneq,        // J_p M_p >= 2 (1/d + p - 1) I_p^2
  ConcavityCond,  // -R_p'' >= sigma_q R_p'^2 (oriented by sign of sigma_q)
  ConcavityN,     // d2/dt2 N_pq <= 0
  DilationQ,      // Q_pq invariant under dilation
  LinearHeatN,    // N(t) affine under the heat flow
};

std::string to_string(CheckId id);

struct CheckSample {
  Real t;
  Real value;  // residual (identities) or margin (inequalities)
};

struct CheckReport {
  CheckId id;
  bool pass = false;
  Real tolerance = 0.0;
  // Identities: largest relative residual. NaN for pure inequalities.
  Real max_rel_residual = std::numeric_limits<Real>::quiet_NaN();
  // Inequalities: smallest margin (relative). NaN for pure identities.
  Real margin_min = std::numeric_limits<Real>::quiet_NaN();
  std::vector<CheckSample> samples;
  // Cross-verdict agreement (only set by check_concavity).
  std::optional<bool> agrees_with_condition;
  // Metadata.
  Real p = 1.0;
  Real q = 1.0;
  int d = 1;
  Index n = 0;
  Real dt_info = std::numeric_limits<Real>::quiet_NaN();
};

// Production identities -dE_p/dt = A I_p and -dI_p/dt = A J_p with
// A = exp((p - q) R_p); emitted as the PME-specialized check ids when
// q == p (A == 1 exactly). At p = 1 the singular part of E_p is constant
// in time, so the E-identity continues as d(-H)/dt = -I_1.
std::pair<CheckReport, CheckReport> check_production_identities(
    const Trajectory& traj, const Orders& o, Real tol_rel = 5e-2);

// Concavity of t -> N_pq(t): parabolic second derivatives at interior
// snapshots must stay below tol_abs_factor * max|N| + tol_rel * |N|.
// Also runs the equivalent curvature condition and records agreement.
CheckReport check_concavity(const Trajectory& traj, const Orders& o,
                            Real tol_abs_factor = 1e-6, Real tol_rel = 0.0);

// The curvature condition itself: -R'' >= sigma_q R'^2, which is the same
// claim as above through exact algebra. Its margin (-N''/N computed from R
// samples) is compared at the coupled quadrature tolerance plus the
// measured disagreement with the direct N-sample curvature, which bounds
// the differing truncation error of the two estimators. margin_min is the
// smallest distance above that pointwise floor (>= 0 exactly when passing).
CheckReport check_concavity_condition(const Trajectory& traj, const Orders& o,
                                      Real tol_abs_factor = 1e-6,
                                      Real tol_rel = 0.0);

// Affinity of N(t) under the heat flow: |second difference| / |first
// difference| at interior snapshots (uniform schedules only).
CheckReport check_heat_affinity(const Trajectory& traj, Real tol = 1e-3);

// Pointwise inequality J_p M_p - 2 (1/d + p - 1) I_p^2 >= 0.
struct KeyInequalityMargin {
  Real margin;      // raw
  Real rel_margin;  // margin / max(|J M|, |2 c I^2|)
  Real j_p;
  Real m_p;
  Real i_p;
};
std::optional<KeyInequalityMargin> key_inequality_margin(const GridDensity& u,
                                                         Real p);
CheckReport check_key_inequality(const Trajectory& traj, const Orders& o,
                                 Real tol = 1e-8);
CheckReport check_key_inequality(const GridDensity& u, const Orders& o,
                                 Real tol = 1e-8);

// Invariance of Q_pq under exact-resample dilation. exponent_shift adds a
// deliberate lambda^shift covariance error and serves as the negative
// control (shift = 0 is the invariance claim).
CheckReport check_dilation_invariance(const GridDensity& u, const Orders& o,
                                      const std::vector<Real>& lambdas,
                                      Real tol = 1e-6,
                                      Real exponent_shift = 0.0);

}  // namespace entropylab

#endif  // ENTROPYLAB_CHECKS_HPP
