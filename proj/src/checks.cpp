#include "entropylab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entropylab/functionals.hpp"
#include "entropylab/time_series.hpp"

namespace entropylab {

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::ProdE: return "ProdE";
    case CheckId::ProdI: return "ProdI";
    case CheckId::ProdE_PME: return "ProdE_PME";
    case CheckId::ProdI_PME: return "ProdI_PME";
    case CheckId::KeyIneq: return "KeyIneq";
    case CheckId::ConcavityCond: return "ConcavityCond";
    case CheckId::ConcavityN: return "ConcavityN";
    case CheckId::DilationQ: return "DilationQ";
    case CheckId::LinearHeatN: return "LinearHeatN";
  }
  return "?";
}

namespace {

void require_orders_match(const Trajectory& traj, const Orders& o,
                          const char* who) {
  if (traj.orders.p != o.p || traj.orders.q != o.q || traj.orders.d != o.d)
    throw std::invalid_argument(std::string(who) +
                                ": Orders do not match the trajectory");
}

void require_snapshots(const Trajectory& traj, std::size_t min_count,
                       const char* who) {
  if (traj.snapshots.size() < min_count)
    throw std::invalid_argument(std::string(who) + ": need at least " +
                                std::to_string(min_count) + " snapshots, got " +
                                std::to_string(traj.snapshots.size()));
}

// Interior snapshot k participates in derivative checks unless it sits in
// the initialization transient.
bool in_transient(const Trajectory& traj, std::size_t k) {
  return traj.times[k] - traj.times.front() < 2.0 * traj.max_dt;
}

CheckReport make_report(CheckId id, const Trajectory& traj) {
  CheckReport r;
  r.id = id;
  r.p = traj.orders.p;
  r.q = traj.orders.q;
  r.d = traj.orders.d;
  r.n = traj.states.empty() ? 0 : traj.states.front().size();
  r.dt_info = traj.max_dt;
  return r;
}

CheckReport make_report(CheckId id, const GridDensity& u, const Orders& o) {
  CheckReport r;
  r.id = id;
  r.p = o.p;
  r.q = o.q;
  r.d = o.d;
  r.n = u.size();
  return r;
}

void finish_identity(CheckReport& r, Real tol) {
  r.tolerance = tol;
  Real worst = 0.0;
  for (const CheckSample& s : r.samples) worst = std::max(worst, s.value);
  r.max_rel_residual = worst;
  r.pass = worst <= tol;
}

void finish_inequality(CheckReport& r, Real tol) {
  r.tolerance = tol;
  Real worst = std::numeric_limits<Real>::infinity();
  for (const CheckSample& s : r.samples) worst = std::min(worst, s.value);
  r.margin_min = worst;
  r.pass = worst >= -tol;
}

Real prefactor_at(const Trajectory& traj, std::size_t k) {
  if (traj.orders.p == traj.orders.q) return 1.0;
  return std::exp((traj.orders.p - traj.orders.q) * traj.snapshots[k].r_p);
}

}  // namespace

std::pair<CheckReport, CheckReport> check_production_identities(
    const Trajectory& traj, const Orders& o, Real tol_rel) {
  require_orders_match(traj, o, "check_production_identities");
  require_snapshots(traj, 8, "check_production_identities");
  if (!(o.p > 0.5))
    throw std::invalid_argument(
        "check_production_identities: needs p > 1/2 (I_p undefined)");

  const bool pme_form = (o.p == o.q);
  const bool shannon = o.shannon_limit_p();
  CheckReport re =
      make_report(pme_form ? CheckId::ProdE_PME : CheckId::ProdE, traj);
  CheckReport ri =
      make_report(pme_form ? CheckId::ProdI_PME : CheckId::ProdI, traj);

  const std::size_t n = traj.snapshots.size();
  // k = 1 is skipped: its stencil includes the initial datum, whose
  // corners (positivity floors, compact fronts) the flow has not smoothed
  // yet. I_p and J_p are derivative-sensitive, so the rate estimate there
  // reflects the datum, not the flow.
  for (std::size_t k = 2; k + 1 < n; ++k) {
    if (in_transient(traj, k)) continue;

    // At p = 1 the 1/(p-1) part of E_p is mass, constant in t: the moving
    // part of E_p is -H = -R_1.
    auto e_of = [&](std::size_t j) {
      return shannon ? -traj.snapshots[j].r_p : *traj.snapshots[j].e_p;
    };
    const Real a = prefactor_at(traj, k);
    const LocalDerivatives de = parabolic_derivatives(
        traj.times[k - 1], traj.times[k], traj.times[k + 1], e_of(k - 1),
        e_of(k), e_of(k + 1));
    const Real rhs_e = a * traj.snapshots[k].i_p.value();
    re.samples.push_back(
        {traj.times[k], std::abs(-de.first - rhs_e) / std::abs(rhs_e)});

    if (traj.snapshots[k - 1].j_p && traj.snapshots[k].j_p &&
        traj.snapshots[k + 1].j_p && traj.snapshots[k - 1].i_p &&
        traj.snapshots[k + 1].i_p) {
      const LocalDerivatives di = parabolic_derivatives(
          traj.times[k - 1], traj.times[k], traj.times[k + 1],
          *traj.snapshots[k - 1].i_p, *traj.snapshots[k].i_p,
          *traj.snapshots[k + 1].i_p);
      const Real rhs_i = a * *traj.snapshots[k].j_p;
      ri.samples.push_back(
          {traj.times[k], std::abs(-di.first - rhs_i) / std::abs(rhs_i)});
    }
  }
  if (re.samples.empty() || ri.samples.empty())
    throw std::invalid_argument(
        "check_production_identities: no usable interior snapshots "
        "(missing I_p/J_p or all within the transient window)");
  finish_identity(re, tol_rel);
  finish_identity(ri, tol_rel);
  return {re, ri};
}

CheckReport check_concavity_condition(const Trajectory& traj, const Orders& o,
                                      Real tol_abs_factor, Real tol_rel) {
  require_orders_match(traj, o, "check_concavity_condition");
  require_snapshots(traj, 8, "check_concavity_condition");

  CheckReport r = make_report(CheckId::ConcavityCond, traj);
  const Real sq = o.sigma_q();
  Real n_max = 0.0;
  for (const FunctionalSnapshot& s : traj.snapshots)
    n_max = std::max(n_max, std::abs(s.n_pq));

  // N'' = sigma_q N (R'' + sigma_q R'^2), so requiring N'' <= tol is the
  // same claim as margin(k) = -sigma_q (R'' + sigma_q R'^2) >= -tol / N_k.
  // The left side comes from R samples, the right from N samples, and the
  // two parabola estimators carry different truncation errors (an affine N
  // is differentiated exactly while its logarithm is not), so the margin
  // is compared against the quadrature tolerance plus the measured
  // disagreement of the two curvature estimates, which bounds the local
  // truncation scale without assuming the result.
  const std::size_t n = traj.snapshots.size();
  bool all_ok = true;
  Real worst = std::numeric_limits<Real>::infinity();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (in_transient(traj, k)) continue;
    const LocalDerivatives dr = parabolic_derivatives(
        traj.times[k - 1], traj.times[k], traj.times[k + 1],
        traj.snapshots[k - 1].r_p, traj.snapshots[k].r_p,
        traj.snapshots[k + 1].r_p);
    const LocalDerivatives dn = parabolic_derivatives(
        traj.times[k - 1], traj.times[k], traj.times[k + 1],
        traj.snapshots[k - 1].n_pq, traj.snapshots[k].n_pq,
        traj.snapshots[k + 1].n_pq);
    const Real n_k = traj.snapshots[k].n_pq;
    const Real margin = -sq * (dr.second + sq * dr.first * dr.first);
    const Real direct = dn.second / n_k;
    const Real tol_here =
        tol_abs_factor * n_max / n_k + tol_rel + std::abs(margin + direct);
    r.samples.push_back({traj.times[k], margin});
    all_ok = all_ok && margin >= -tol_here;
    worst = std::min(worst, margin + tol_here);
  }
  if (r.samples.empty())
    throw std::invalid_argument("check_concavity_condition: no usable samples");
  r.tolerance = tol_abs_factor;
  r.pass = all_ok;
  // Distance above the pointwise floor; nonnegative exactly when passing.
  r.margin_min = worst;
  return r;
}

CheckReport check_concavity(const Trajectory& traj, const Orders& o,
                            Real tol_abs_factor, Real tol_rel) {
  require_orders_match(traj, o, "check_concavity");
  require_snapshots(traj, 8, "check_concavity");

  CheckReport r = make_report(CheckId::ConcavityN, traj);
  Real n_max = 0.0;
  for (const FunctionalSnapshot& s : traj.snapshots)
    n_max = std::max(n_max, std::abs(s.n_pq));
  const Real tol_abs = tol_abs_factor * n_max;

  const std::size_t n = traj.snapshots.size();
  Real worst = -std::numeric_limits<Real>::infinity();
  bool all_ok = true;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (in_transient(traj, k)) continue;
    const LocalDerivatives dn = parabolic_derivatives(
        traj.times[k - 1], traj.times[k], traj.times[k + 1],
        traj.snapshots[k - 1].n_pq, traj.snapshots[k].n_pq,
        traj.snapshots[k + 1].n_pq);
    r.samples.push_back({traj.times[k], dn.second});
    const Real tol_here = tol_abs + tol_rel * std::abs(traj.snapshots[k].n_pq);
    all_ok = all_ok && dn.second <= tol_here;
    worst = std::max(worst, dn.second - tol_here);
  }
  if (r.samples.empty())
    throw std::invalid_argument("check_concavity: no usable samples");
  r.tolerance = tol_abs;
  r.pass = all_ok;
  // Margin convention: positive means concave with room to spare.
  r.margin_min = -worst;
  r.max_rel_residual =
      n_max > 0.0
          ? std::max_element(r.samples.begin(), r.samples.end(),
                             [](const CheckSample& a, const CheckSample& b) {
                               return a.value < b.value;
                             })
                ->value /
                n_max
          : 0.0;

  const CheckReport cond =
      check_concavity_condition(traj, o, tol_abs_factor, tol_rel);
  r.agrees_with_condition = (cond.pass == r.pass);
  return r;
}

CheckReport check_heat_affinity(const Trajectory& traj, Real tol) {
  require_snapshots(traj, 8, "check_heat_affinity");
  if (traj.orders.p != 1.0 || traj.orders.q != 1.0)
    throw std::invalid_argument("check_heat_affinity: heat flow only (p = q = 1)");
  const std::size_t n = traj.times.size();
  const Real gap0 = traj.times[1] - traj.times[0];
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const Real gap = traj.times[k + 1] - traj.times[k];
    if (std::abs(gap - gap0) > 1e-9 * gap0)
      throw std::invalid_argument(
          "check_heat_affinity: needs a uniform snapshot schedule");
  }

  CheckReport r = make_report(CheckId::LinearHeatN, traj);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (in_transient(traj, k)) continue;
    const Real y0 = traj.snapshots[k - 1].n_shannon;
    const Real y1 = traj.snapshots[k].n_shannon;
    const Real y2 = traj.snapshots[k + 1].n_shannon;
    const Real second = std::abs(y2 - 2.0 * y1 + y0);
    const Real first = 0.5 * std::abs(y2 - y0);
    r.samples.push_back({traj.times[k], second / first});
  }
  if (r.samples.empty())
    throw std::invalid_argument("check_heat_affinity: no usable samples");
  finish_identity(r, tol);
  return r;
}

std::optional<KeyInequalityMargin> key_inequality_margin(const GridDensity& u,
                                                         Real p) {
  const std::optional<Real> j = second_order_functional(u, p);
  if (!j) return std::nullopt;
  KeyInequalityMargin m;
  m.j_p = *j;
  m.m_p = power_moment(u, p);
  m.i_p = fisher_information(u, p);
  const Real coeff = 2.0 * (1.0 / static_cast<Real>(u.dim()) + p - 1.0);
  const Real lhs = m.j_p * m.m_p;
  const Real rhs = coeff * m.i_p * m.i_p;
  m.margin = lhs - rhs;
  m.rel_margin =
      m.margin / std::max({std::abs(lhs), std::abs(rhs), config::kValueFloor});
  return m;
}

CheckReport check_key_inequality(const Trajectory& traj, const Orders& o,
                                 Real tol) {
  require_orders_match(traj, o, "check_key_inequality");
  CheckReport r = make_report(CheckId::KeyIneq, traj);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const std::optional<KeyInequalityMargin> m =
        key_inequality_margin(traj.states[k], o.p);
    if (m) r.samples.push_back({traj.times[k], m->rel_margin});
  }
  if (r.samples.empty())
    throw std::invalid_argument(
        "check_key_inequality: J_p absent at every snapshot");
  finish_inequality(r, tol);
  return r;
}

CheckReport check_key_inequality(const GridDensity& u, const Orders& o,
                                 Real tol) {
  CheckReport r = make_report(CheckId::KeyIneq, u, o);
  const std::optional<KeyInequalityMargin> m = key_inequality_margin(u, o.p);
  if (!m)
    throw std::invalid_argument("check_key_inequality: J_p absent");
  r.samples.push_back({0.0, m->rel_margin});
  finish_inequality(r, tol);
  return r;
}

CheckReport check_dilation_invariance(const GridDensity& u, const Orders& o,
                                      const std::vector<Real>& lambdas,
                                      Real tol, Real exponent_shift) {
  if (lambdas.empty())
    throw std::invalid_argument("check_dilation_invariance: no lambdas");
  CheckReport r = make_report(CheckId::DilationQ, u, o);
  const Real base = q_functional(u, o);
  for (const Real lambda : lambdas) {
    const Real dilated =
        q_functional(dilate(u, lambda), o) * std::pow(lambda, exponent_shift);
    r.samples.push_back({lambda, std::abs(dilated - base) / std::abs(base)});
  }
  finish_identity(r, tol);
  return r;
}

}  // namespace entropylab
