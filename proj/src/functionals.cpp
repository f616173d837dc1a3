#include "entropylab/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "entropylab/qcalculus.hpp"
#include "entropylab/stencils.hpp"

namespace entropylab {

namespace {

// dlog(e_p)(u) = p/(p-1) u^(p-1), the entropy-variable of order p; log u on
// the Shannon branch. Evaluated on floored values so exact zeros outside
// the support stay finite (they are excluded from integrands by the
// support mask, but stencils still read them).
ArrayX entropy_variable(const ArrayX& u, Real p) {
  const ArrayX uf = u.max(config::kValueFloor);
  if (std::abs(p - 1.0) < config::kLimitEps) return uf.log();
  return (p / (p - 1.0)) * elementwise_power(uf, p - 1.0);
}

struct SupportMask {
  Eigen::Array<bool, Eigen::Dynamic, 1> active;
  Index count;
  Index lo;
  Index hi;
};

SupportMask support_mask(const GridDensity& u) {
  const Real cut = config::kSupportEps * u.max_value();
  SupportMask m;
  m.active = u.values() >= cut;
  m.count = m.active.count();
  m.lo = 0;
  m.hi = u.size() - 1;
  while (m.lo < u.size() && !m.active(m.lo)) ++m.lo;
  while (m.hi > 0 && !m.active(m.hi)) --m.hi;
  return m;
}

Real masked_integral(const GridDensity& u, const SupportMask& m,
                     const ArrayX& integrand) {
  return (m.active.select(integrand, 0.0) * u.weights()).sum();
}

}  // namespace

ArrayX elementwise_power(const ArrayX& u, Real p) {
  if (p == 1.0) return u;
  if (p == 2.0) return u.square();
  if (p == 3.0) return u.cube();
  if (p == 0.5) return u.sqrt();
  if (p == 1.5) return u * u.sqrt();
  if (p == -0.5) return u.sqrt().inverse();
  return (p * u.max(config::kValueFloor).log()).exp();
}

Real power_moment(const GridDensity& u, Real p) {
  if (!std::isfinite(p)) throw std::invalid_argument("power_moment: p must be finite");
  if (p == 1.0) return u.mass();
  return u.integrate(elementwise_power(u.values(), p));
}

Real e_p_moment(const GridDensity& u, Real p) {
  if (std::abs(p - 1.0) < config::kLimitEps)
    throw std::domain_error("e_p_moment: undefined at p = 1");
  return power_moment(u, p) / (p - 1.0);
}

Real shannon_entropy(const GridDensity& u) {
  // 0 log 0 = 0: flooring makes the log finite and the factor u kills it.
  return -u.integrate(u.values() * u.values().max(config::kValueFloor).log());
}

Real renyi_entropy(const GridDensity& u, Real p) {
  if (std::abs(p - 1.0) < config::kLimitEps) return shannon_entropy(u);
  return std::log(power_moment(u, p)) / (1.0 - p);
}

Real tsallis_entropy(const GridDensity& u, Real p) {
  return s_pq_from_renyi(renyi_entropy(u, p), p);
}

Real sharma_mittal_entropy(const GridDensity& u, const Orders& o) {
  return s_pq_from_renyi(renyi_entropy(u, o.p), o.q);
}

Real entropy_power(const GridDensity& u, const Orders& o) {
  return std::exp(o.sigma_q() * renyi_entropy(u, o.p));
}

Real p_entropy_power(const GridDensity& u, Real p) {
  return entropy_power(u, Orders(p, p, u.dim()));
}

Real b_entropy_power(const GridDensity& u, Real p) {
  return std::exp((2.0 / u.dim()) * renyi_entropy(u, p));
}

Real shannon_entropy_power(const GridDensity& u) {
  return std::exp((2.0 / u.dim()) * shannon_entropy(u));
}

FisherInformation fisher_information_detail(const GridDensity& u, Real p) {
  if (!(p > 0.5))
    throw std::domain_error("fisher_information: requires p > 1/2");
  const ArrayX& v = u.values();
  const bool radial = u.geometry() == Geometry::Radial;
  const SupportMask m = support_mask(u);

  const ArrayX g = gradient(elementwise_power(v, p), u.spacing(), radial);
  const Real primary =
      masked_integral(u, m, g.square() / v.max(config::kValueFloor));

  const ArrayX gf = gradient(entropy_variable(v, p), u.spacing(), radial);
  const Real alt = masked_integral(u, m, v * gf.square());

  FisherInformation out;
  out.value = primary;
  out.alt_value = alt;
  out.rel_gap = std::abs(primary - alt) /
                std::max(std::abs(primary), config::kValueFloor);
  return out;
}

Real fisher_information(const GridDensity& u, Real p) {
  return fisher_information_detail(u, p).value;
}

std::optional<Real> second_order_functional(const GridDensity& u, Real p) {
  const SupportMask m = support_mask(u);
  if (m.count < config::kMinSupportNodes) return std::nullopt;
  const ArrayX& v = u.values();
  if (v.segment(m.lo, m.hi - m.lo + 1).minCoeff() <= 0.0)
    throw std::domain_error(
        "second_order_functional: density vanishes inside its support window");

  const bool radial = u.geometry() == Geometry::Radial;
  const ArrayX f = entropy_variable(v, p);
  const ArrayX fxx = second_difference(f, u.spacing(), radial);

  ArrayX hess_sq;
  ArrayX lap;
  if (radial && u.dim() > 1) {
    const Real d = u.dim();
    ArrayX fr_over_r = gradient(f, u.spacing(), true);
    fr_over_r.tail(u.size() - 1) /= u.nodes().tail(u.size() - 1);
    fr_over_r(0) = fxx(0);  // f'(r)/r -> f''(0) on the axis
    hess_sq = fxx.square() + (d - 1.0) * fr_over_r.square();
    lap = fxx + (d - 1.0) * fr_over_r;
  } else {
    hess_sq = fxx.square();
    lap = fxx;
  }

  const ArrayX integrand =
      2.0 * elementwise_power(v, p) * (hess_sq + (p - 1.0) * lap.square());
  return masked_integral(u, m, integrand);
}

Real q_functional(const GridDensity& u, const Orders& o) {
  // N_pq exp((2p - q - 1) R_p) I_p: the q's cancel, leaving the form that
  // is also continuous through p = 1.
  const Real r = renyi_entropy(u, o.p);
  const Real expo = 2.0 * (1.0 / static_cast<Real>(o.d) + o.p - 1.0);
  return std::exp(expo * r) * fisher_information(u, o.p);
}

FunctionalSnapshot evaluate_snapshot(const GridDensity& u, const Orders& o,
                                     Real t) {
  FunctionalSnapshot s;
  s.t = t;
  s.mass = u.mass();
  s.m_p = power_moment(u, o.p);
  if (!o.shannon_limit_p()) s.e_p = s.m_p / (o.p - 1.0);
  s.r_p = o.shannon_limit_p() ? shannon_entropy(u) : std::log(s.m_p) / (1.0 - o.p);
  s.t_p = s_pq_from_renyi(s.r_p, o.p);
  s.s_pq = s_pq_from_renyi(s.r_p, o.q);
  s.n_pq = std::exp(o.sigma_q() * s.r_p);
  s.p_p = std::exp(o.sigma_p() * s.r_p);
  s.b_p = std::exp((2.0 / o.d) * s.r_p);
  s.n_shannon = shannon_entropy_power(u);
  if (o.p > 0.5) {
    const Real i_p = fisher_information(u, o.p);
    s.i_p = i_p;
    s.q_pq =
        std::exp(2.0 * (1.0 / static_cast<Real>(o.d) + o.p - 1.0) * s.r_p) * i_p;
    s.j_p = second_order_functional(u, o.p);
  }
  return s;
}

}  // namespace entropylab
