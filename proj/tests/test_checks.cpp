#include <doctest.h>

#include <cmath>
#include <vector>

#include "entropylab/checks.hpp"
#include "entropylab/flows.hpp"
#include "entropylab/functionals.hpp"
#include "entropylab/reference_densities.hpp"
#include "entropylab/time_series.hpp"

using namespace entropylab;

namespace {

FlowSpec spec_for(FlowKind kind, Real p, Real q, Real t_end,
                  Schedule schedule = Schedule::Geometric) {
  FlowSpec spec;
  spec.kind = kind;
  spec.p = p;
  spec.q = q;
  spec.t_end = t_end;
  spec.schedule = schedule;
  return spec;
}

const Trajectory& sm_23_trajectory() {
  static const Trajectory traj = solve_sm_flow(
      gaussian_line(1.0, 8.0, 1024), Orders(2.0, 3.0, 1),
      spec_for(FlowKind::SharmaMittal, 2.0, 3.0, 1.0));
  return traj;
}

const Trajectory& heat_trajectory() {
  static const Trajectory traj =
      solve_pme(gaussian_line(1.0, 8.0, 1024), 1.0,
                spec_for(FlowKind::Heat, 1.0, 1.0, 0.5, Schedule::Uniform));
  return traj;
}

// A hand-built trajectory whose N_pq is exactly the convex parabola
// 1 + t^2, for exercising the failure verdicts without a flow.
Trajectory convex_trajectory(int count) {
  const Orders o(2.0, 3.0, 1);
  Trajectory traj(spec_for(FlowKind::SharmaMittal, 2.0, 3.0, 1.0), o);
  for (int k = 0; k < count; ++k) {
    const Real t = static_cast<Real>(k) / (count - 1);
    FunctionalSnapshot s;
    s.t = t;
    s.n_pq = 1.0 + t * t;
    s.r_p = std::log(s.n_pq) / o.sigma_q();
    traj.times.push_back(t);
    traj.snapshots.push_back(s);
  }
  traj.max_dt = 0.0;
  return traj;
}

}  // namespace

TEST_CASE("production identities hold along the two-parameter flow") {
  const Trajectory& traj = sm_23_trajectory();
  const Orders o(2.0, 3.0, 1);
  const auto [re, ri] = check_production_identities(traj, o);
  CHECK(re.id == CheckId::ProdE);
  CHECK(ri.id == CheckId::ProdI);
  CHECK(re.pass);
  CHECK(ri.pass);
  CHECK(re.max_rel_residual < 5e-2);
  CHECK(ri.max_rel_residual < 5e-2);
  // The first usable sample sits at the third snapshot: the parabola at
  // k = 1 would touch the unsmoothed initial datum.
  CHECK(re.samples.front().t == doctest::Approx(traj.times[2]));
}

TEST_CASE("dropping the prefactor breaks the energy identity visibly") {
  const Trajectory& traj = sm_23_trajectory();
  // Recompute the k = 2 residual against I_p alone. A = exp(-R_2) < 0.3
  // for a spreading unit Gaussian, so the mismatch is order one.
  const std::size_t k = 2;
  const LocalDerivatives de = parabolic_derivatives(
      traj.times[k - 1], traj.times[k], traj.times[k + 1],
      *traj.snapshots[k - 1].e_p, *traj.snapshots[k].e_p,
      *traj.snapshots[k + 1].e_p);
  const Real bad = std::abs(-de.first - *traj.snapshots[k].i_p) /
                   *traj.snapshots[k].i_p;
  CHECK(bad > 0.3);
}

TEST_CASE("identities specialize to the order-p ids when q = p") {
  const GridDensity u0 = gaussian_line(1.0, 8.0, 1024);
  const Trajectory traj =
      solve_pme(u0, 2.0, spec_for(FlowKind::PorousMedium, 2.0, 2.0, 1.0));
  const auto [re, ri] = check_production_identities(traj, Orders(2.0, 2.0, 1));
  CHECK(re.id == CheckId::ProdE_PME);
  CHECK(ri.id == CheckId::ProdI_PME);
  CHECK(re.pass);
  CHECK(ri.pass);
}

TEST_CASE("the energy identity continues through p = 1 as the entropy rate") {
  const auto [re, ri] =
      check_production_identities(heat_trajectory(), Orders(1.0, 1.0, 1));
  CHECK(re.pass);
  CHECK(ri.pass);
  CHECK(re.max_rel_residual < 1e-2);
}

TEST_CASE("entropy power is concave along the flow and verdicts agree") {
  const Orders o(2.0, 3.0, 1);
  const CheckReport r = check_concavity(sm_23_trajectory(), o);
  CHECK(r.pass);
  REQUIRE(r.agrees_with_condition.has_value());
  CHECK(*r.agrees_with_condition);
  CHECK(r.margin_min > 0.0);
  // Strict concavity away from the self-similar attractor: every sampled
  // second derivative is negative outright, not merely within tolerance.
  for (const CheckSample& s : r.samples) CHECK(s.value < 0.0);

  const CheckReport cond = check_concavity_condition(sm_23_trajectory(), o);
  CHECK(cond.pass);
  CHECK(cond.margin_min >= 0.0);
}

TEST_CASE("a convex entropy power fails both forms coherently") {
  const Trajectory traj = convex_trajectory(9);
  const Orders o(2.0, 3.0, 1);
  const CheckReport r = check_concavity(traj, o);
  CHECK_FALSE(r.pass);
  REQUIRE(r.agrees_with_condition.has_value());
  CHECK(*r.agrees_with_condition);  // both verdicts say convex
  // d2/dt2 (1 + t^2) = 2 at every interior sample.
  for (const CheckSample& s : r.samples)
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.margin_min < 0.0);
  CHECK_FALSE(check_concavity_condition(traj, o).pass);
}

TEST_CASE("concavity checks validate their inputs") {
  const Trajectory traj = convex_trajectory(9);
  CHECK_THROWS_AS(check_concavity(traj, Orders(2.1, 3.0, 1)),
                  std::invalid_argument);
  const Trajectory tiny = convex_trajectory(5);
  CHECK_THROWS_AS(check_concavity(tiny, Orders(2.0, 3.0, 1)),
                  std::invalid_argument);
}

TEST_CASE("shannon entropy power is affine under the heat flow") {
  const CheckReport r = check_heat_affinity(heat_trajectory());
  CHECK(r.pass);
  CHECK(r.max_rel_residual < 1e-3);

  // Geometric schedules are refused: the ratio test needs uniform gaps.
  const Trajectory geo =
      solve_pme(gaussian_line(1.0, 8.0, 256), 1.0,
                spec_for(FlowKind::Heat, 1.0, 1.0, 0.5));
  CHECK_THROWS_AS(check_heat_affinity(geo), std::invalid_argument);
  // And the claim is specific to p = q = 1.
  CHECK_THROWS_AS(check_heat_affinity(sm_23_trajectory()),
                  std::invalid_argument);
}

TEST_CASE("key inequality margins behave across the order range") {
  // p = 1 on a Gaussian is the equality case: the discrete margin is
  // quadrature noise around zero.
  const GridDensity phi = gaussian_line(1.0, 8.0, 4096);
  const auto eq = key_inequality_margin(phi, 1.0);
  REQUIRE(eq.has_value());
  CHECK(std::abs(eq->rel_margin) < 1e-4);

  // A bimodal density at p = 2 sits strictly inside the inequality.
  const GridDensity mix = gaussian_mixture_line(
      {{0.5, -2.0, 0.5}, {0.5, 2.0, 1.0}}, 9.0, 2048);
  const auto strict = key_inequality_margin(mix, 2.0);
  REQUIRE(strict.has_value());
  CHECK(strict->rel_margin > 1e-3);
  CHECK(strict->margin > 0.0);
  CHECK(strict->j_p > 0.0);
  CHECK(strict->i_p > 0.0);

  // The self-similar profile is the equality case at p = 2; its sampled
  // margin may dip slightly negative from the front kink.
  const GridDensity bar = self_similar_line(2.0, 1.0, 6.0, 2048);
  const auto self_sim = key_inequality_margin(bar, 2.0);
  REQUIRE(self_sim.has_value());
  CHECK(std::abs(self_sim->rel_margin) < 1e-2);
}

TEST_CASE("key inequality holds at every snapshot of the flow") {
  const CheckReport r =
      check_key_inequality(sm_23_trajectory(), Orders(2.0, 3.0, 1), 1e-8);
  CHECK(r.pass);
  CHECK(r.margin_min >= -1e-8);
  CHECK(r.samples.size() == sm_23_trajectory().states.size());
}

TEST_CASE("q functional is dilation invariant, and the control catches drift") {
  const GridDensity u = gaussian_line(1.0, 8.0, 4096);
  const std::vector<Real> lambdas{0.5, 2.0, 5.0};
  const Orders o(2.0, 3.0, 1);

  const CheckReport good = check_dilation_invariance(u, o, lambdas, 1e-6);
  CHECK(good.pass);
  CHECK(good.max_rel_residual < 1e-6);

  // Planting a lambda^0.1 covariance error must be flagged, and the
  // residual must match the planted size: max over lambdas of
  // |lambda^0.1 - 1| = 5^0.1 - 1 ~ 0.175.
  const CheckReport bad =
      check_dilation_invariance(u, o, lambdas, 1e-6, 0.1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_rel_residual > 1e-2);
  CHECK(bad.max_rel_residual > 0.1);
  CHECK(bad.max_rel_residual < 0.25);

  CHECK_THROWS_AS(check_dilation_invariance(u, o, {}, 1e-6),
                  std::invalid_argument);
}

TEST_CASE("report ids render as stable strings") {
  CHECK(to_string(CheckId::ProdE) == "ProdE");
  CHECK(to_string(CheckId::KeyIneq) == "KeyIneq");
  CHECK(to_string(CheckId::ConcavityCond) == "ConcavityCond");
  CHECK(to_string(CheckId::LinearHeatN) == "LinearHeatN");
}
