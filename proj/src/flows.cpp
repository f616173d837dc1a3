#include "entropylab/flows.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "entropylab/errors.hpp"

namespace entropylab {

Real FlowSpec::effective_p() const {
  switch (kind) {
    case FlowKind::Heat: return 1.0;
    default: return p;
  }
}

Real FlowSpec::effective_q() const {
  switch (kind) {
    case FlowKind::Heat: return 1.0;
    case FlowKind::PorousMedium: return p;
    case FlowKind::Renyi: return 1.0;
    case FlowKind::SharmaMittal: return q;
  }
  return q;
}

void FlowSpec::validate() const {
  if (!(t_start >= 0.0) || !(t_end > t_start))
    throw std::invalid_argument("FlowSpec: need t_end > t_start >= 0");
  if (snapshot_count < 2)
    throw std::invalid_argument("FlowSpec: need at least 2 snapshots");
  if (!(dt.value > 0.0))
    throw std::invalid_argument("FlowSpec: dt policy value must be positive");
  if (dt.mode == DtPolicy::Mode::CflFraction && dt.value > 1.0)
    throw std::invalid_argument("FlowSpec: CFL fraction must be in (0, 1]");
  if (!(min_first_gap_fraction > 0.0) || min_first_gap_fraction > 0.5)
    throw std::invalid_argument("FlowSpec: min_first_gap_fraction in (0, 0.5]");
  if (!(positivity_floor >= 0.0) || positivity_floor >= 1.0)
    throw std::invalid_argument("FlowSpec: positivity_floor in [0, 1)");
  if (max_steps < 1) throw std::invalid_argument("FlowSpec: max_steps < 1");
  if (!std::isfinite(effective_p()) || !std::isfinite(effective_q()))
    throw std::invalid_argument("FlowSpec: orders must be finite");
}

std::vector<Real> snapshot_times(const FlowSpec& spec) {
  spec.validate();
  const int n = spec.snapshot_count;
  const Real span = spec.t_end - spec.t_start;
  std::vector<Real> times(n);
  if (spec.schedule == Schedule::Uniform || n == 2) {
    for (int k = 0; k < n; ++k)
      times[k] = spec.t_start + span * static_cast<Real>(k) / (n - 1);
    times.back() = spec.t_end;
    return times;
  }

  // Geometric gaps g_j = delta * rho^j with g_0 = min_first_gap_fraction
  // of the span; rho solved so the gaps sum to the span, then the
  // cumulative sums are rescaled so the endpoint is hit exactly.
  const int gaps = n - 1;
  const Real delta = spec.min_first_gap_fraction;
  auto total = [&](Real rho) {
    // sum_{j<gaps} delta * rho^j (in units of the span)
    if (std::abs(rho - 1.0) < 1e-12) return delta * gaps;
    return delta * (std::pow(rho, gaps) - 1.0) / (rho - 1.0);
  };
  Real lo = 1.0, hi = 2.0;
  while (total(hi) < 1.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const Real mid = 0.5 * (lo + hi);
    (total(mid) < 1.0 ? lo : hi) = mid;
  }
  const Real rho = 0.5 * (lo + hi);

  Real cum = 0.0;
  std::vector<Real> cums(gaps);
  Real g = delta;
  for (int j = 0; j < gaps; ++j, g *= rho) cums[j] = (cum += g);
  times[0] = spec.t_start;
  for (int k = 1; k < n; ++k)
    times[k] = spec.t_start + span * (cums[k - 1] / cums.back());
  times.back() = spec.t_end;
  return times;
}

namespace {

// Precomputed grid geometry for the conservative update
//   du_i = (G_i - G_{i-1}) / V_i,  G_j = S_{j+1/2} (v_{j+1} - v_j) / h,
// with zero flux through both walls. V are finite-volume cell volumes
// (half cells at the ends), so sum(V * du) telescopes to zero exactly;
// on the line V coincides with the trapezoid weights.
struct StepGeometry {
  ArrayX face_over_h;  // S_{j+1/2} / h, size n-1
  ArrayX inv_volume;   // 1 / V_i, size n
  ArrayX volume;       // V_i, size n
  Real cfl_geometry;   // min_i V_i h / (S_{i-1/2} + S_{i+1/2})

  StepGeometry(Geometry geometry, int dim, Real h, Index n) {
    ArrayX s(n - 1);
    if (geometry == Geometry::Line1D || dim == 1) {
      s.setOnes();
    } else {
      for (Index j = 0; j + 1 < n; ++j)
        s(j) = std::pow((static_cast<Real>(j) + 0.5) * h, dim - 1);
    }
    volume.resize(n);
    if (geometry == Geometry::Line1D) {
      volume.setConstant(h);
      volume(0) = volume(n - 1) = 0.5 * h;
    } else {
      const Real dr = static_cast<Real>(dim);
      auto cell = [&](Real a, Real b) {
        return (std::pow(b, dim) - std::pow(a, dim)) / dr;
      };
      for (Index i = 0; i < n; ++i) {
        const Real r = static_cast<Real>(i) * h;
        const Real a = i == 0 ? 0.0 : r - 0.5 * h;
        const Real b = i == n - 1 ? r : r + 0.5 * h;
        volume(i) = cell(a, b);
      }
    }
    face_over_h = s / h;
    inv_volume = volume.inverse();

    cfl_geometry = std::numeric_limits<Real>::infinity();
    for (Index i = 0; i < n; ++i) {
      const Real s_sum =
          (i == 0 ? 0.0 : s(i - 1)) + (i == n - 1 ? 0.0 : s(i));
      cfl_geometry = std::min(cfl_geometry, volume(i) * h / s_sum);
    }
  }
};

void apply_update(const StepGeometry& geo, const ArrayX& v, Real scale,
                  ArrayX& g, ArrayX& u) {
  const Index n = u.size();
  g = geo.face_over_h * (v.tail(n - 1) - v.head(n - 1));
  u.segment(1, n - 2) +=
      scale * geo.inv_volume.segment(1, n - 2) * (g.tail(n - 2) - g.head(n - 2));
  u(0) += scale * geo.inv_volume(0) * g(0);
  u(n - 1) -= scale * geo.inv_volume(n - 1) * g(n - 2);
}

// Local diffusivity bound max_i p u_i^(p-1); infinite when p < 1 and the
// state touches zero, which the caller turns into a diagnostic.
Real diffusivity_bound(Real p, Real umin, Real umax) {
  if (p == 1.0) return 1.0;
  if (p > 1.0) return p * std::pow(umax, p - 1.0);
  return umin > 0.0 ? p * std::pow(umin, p - 1.0)
                    : std::numeric_limits<Real>::infinity();
}

}  // namespace

namespace detail {

ArrayX flow_step(const ArrayX& u, Real p, Real prefactor, Real dt, Real h,
                 Geometry geometry, int dim) {
  StepGeometry geo(geometry, dim, h, u.size());
  ArrayX out = u;
  ArrayX g;
  const ArrayX v = elementwise_power(u, p);
  apply_update(geo, v, prefactor * dt, g, out);
  return out;
}

}  // namespace detail

Real max_stable_dt(const GridDensity& u, Real p, Real prefactor) {
  StepGeometry geo(u.geometry(), u.dim(), u.spacing(), u.size());
  const Real chi = diffusivity_bound(p, u.values().minCoeff(), u.max_value());
  return geo.cfl_geometry / (prefactor * chi);
}

Trajectory solve_flow(const GridDensity& u0_in, const FlowSpec& spec) {
  spec.validate();
  const Real p = spec.effective_p();
  const Real q = spec.effective_q();
  const Orders orders(p, q, u0_in.dim());

  const GridDensity u0 = spec.positivity_floor > 0.0
                             ? apply_relative_floor(u0_in, spec.positivity_floor)
                             : u0_in;

  const Index n = u0.size();
  const Real h = u0.spacing();
  const StepGeometry geo(u0.geometry(), u0.dim(), h, n);
  const ArrayX& wq = u0.weights();  // trapezoid weights, for R_p(u)

  Trajectory traj(spec, orders);
  traj.times = snapshot_times(spec);

  const bool unit_prefactor = (q == p);
  const bool shannon_p = orders.shannon_limit_p();
  const bool pure_heat = (p == 1.0 && unit_prefactor);

  ArrayX u = u0.values();
  ArrayX v;  // u^p buffer
  ArrayX g;  // face flux buffer
  const Real fv_mass0 = (geo.volume * u).sum();

  Real t = spec.t_start;
  Real tau = 0.0;
  long steps = 0;

  auto record = [&](Real at) {
    GridDensity state(u0.geometry(), u0.dim(), u0.x0(), h, u);
    traj.raw_mass.push_back((wq * u).sum());
    traj.reparam_tau.push_back(tau);
    traj.snapshots.push_back(evaluate_snapshot(state, orders, at));
    traj.states.push_back(std::move(state));
  };

  record(t);
  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const Real t_next = traj.times[k];
    while (t < t_next) {
      const ArrayX* vp = &u;
      if (!pure_heat) {
        v = elementwise_power(u, p);
        vp = &v;
      }

      Real prefactor = 1.0;
      if (!unit_prefactor) {
        // A = exp((p - q) R_p). The moment reuses v = u^p.
        const Real renyi =
            shannon_p ? -(wq * u * u.max(config::kValueFloor).log()).sum()
                      : std::log((wq * (*vp)).sum()) / (1.0 - p);
        prefactor = std::exp((p - q) * renyi);
      }

      const Real umin = u.minCoeff();
      const Real umax = u.maxCoeff();
      if (umin < 0.0) {
        if (umin < -1e-12 * umax)
          throw NumericalError(
              "solve_flow: density went negative (min = " +
              std::to_string(umin) + " at t = " + std::to_string(t) + ")");
        u = u.max(0.0);
      }

      const Real chi = diffusivity_bound(p, umin, umax);
      if (!std::isfinite(chi))
        throw NumericalError(
            "solve_flow: CFL bound degenerates (state touches zero with p < 1); "
            "set positivity_floor");
      const Real stable = geo.cfl_geometry / (prefactor * chi);

      Real dt;
      if (spec.dt.mode == DtPolicy::Mode::CflFraction) {
        dt = spec.dt.value * stable;
      } else {
        dt = spec.dt.value;
        if (dt > stable)
          throw NumericalError(
              "solve_flow: fixed dt = " + std::to_string(dt) +
              " exceeds the monotonicity bound; maximal stable dt = " +
              std::to_string(stable));
      }
      if (t + dt >= t_next) {
        dt = t_next - t;
        t = t_next;
      } else {
        t += dt;
      }

      apply_update(geo, *vp, prefactor * dt, g, u);
      tau += prefactor * dt;
      traj.max_dt = std::max(traj.max_dt, dt);
      if (++steps > spec.max_steps)
        throw NumericalError("solve_flow: exceeded max_steps = " +
                             std::to_string(spec.max_steps) + " (t = " +
                             std::to_string(t) + ")");
    }

    const Real fv_mass = (geo.volume * u).sum();
    if (std::abs(fv_mass / fv_mass0 - 1.0) > config::kMassLeakAbort)
      throw NumericalError(
          "solve_flow: mass drift " +
          std::to_string(fv_mass / fv_mass0 - 1.0) + " at t = " +
          std::to_string(t) + " exceeds " +
          std::to_string(config::kMassLeakAbort));
    record(t);
  }

  traj.total_steps = steps;
  return traj;
}

Trajectory solve_pme(const GridDensity& u0, Real p, FlowSpec spec) {
  spec.kind = (p == 1.0) ? FlowKind::Heat : FlowKind::PorousMedium;
  spec.p = p;
  spec.q = p;
  return solve_flow(u0, spec);
}

Trajectory solve_sm_flow(const GridDensity& u0, const Orders& o, FlowSpec spec) {
  if (o.d != u0.dim())
    throw std::invalid_argument(
        "solve_sm_flow: Orders dimension does not match the density");
  spec.kind = FlowKind::SharmaMittal;
  spec.p = o.p;
  spec.q = o.q;
  return solve_flow(u0, spec);
}

}  // namespace entropylab
