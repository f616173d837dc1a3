#ifndef ENTROPYLAB_FUNCTIONALS_HPP
#define ENTROPYLAB_FUNCTIONALS_HPP

#include <optional>

#include "entropylab/grid_density.hpp"
#include "entropylab/orders.hpp"
#include "entropylab/types.hpp"

// Entropies, entropy powers and information functionals of a grid density.
//
// Every p-dependent quantity takes the analytic Shannon branch when
// |p - 1| < kLimitEps, and likewise in q; outside the limit window the
// generic formulas are evaluated through expm1/log1p so values stay finite
// and accurate arbitrarily close to the limits.
namespace entropylab {

// Elementwise u^p with fast paths for the exponents the flows hit hardest.
ArrayX elementwise_power(const ArrayX& u, Real p);

// M_p = integral(u^p).
Real power_moment(const GridDensity& u, Real p);

// E_p = M_p / (p - 1). Undefined at p = 1 (throws inside the limit window).
Real e_p_moment(const GridDensity& u, Real p);

// Shannon entropy H = -integral(u log u), with 0 log 0 = 0.
Real shannon_entropy(const GridDensity& u);

// Renyi entropy R_p = log(M_p) / (1 - p); Shannon branch at p ~ 1.
Real renyi_entropy(const GridDensity& u, Real p);

// Tsallis entropy T_p = (M_p - 1) / (1 - p); Shannon branch at p ~ 1.
Real tsallis_entropy(const GridDensity& u, Real p);

// Two-parameter entropy S_pq = q_log(exp(R_p), q). Interpolates the whole
// family: S_p1 = R_p, S_pp = T_p, S_11 = H.
Real sharma_mittal_entropy(const GridDensity& u, const Orders& o);

// Entropy power N_pq = exp(sigma_q R_p) with sigma_q = 2/d + q - 1,
// and the named specializations
//   P_p = N_pp, B_p = N_p1 = exp((2/d) R_p), N = N_11 = exp((2/d) H).
Real entropy_power(const GridDensity& u, const Orders& o);
Real p_entropy_power(const GridDensity& u, Real p);   // P_p
Real b_entropy_power(const GridDensity& u, Real p);   // B_p
Real shannon_entropy_power(const GridDensity& u);     // N

// Fisher information of order p (p > 1/2):
//   I_p = integral(|grad u^p|^2 / u) = integral(u |grad e_p'(u)|^2),
// with e_p'(u) = p/(p-1) u^(p-1) (log u at p ~ 1). value uses the first
// form; alt_value the second. The two discretizations agree up to stencil
// error, and their gap is a cheap self-diagnostic.
struct FisherInformation {
  Real value;
  Real alt_value;
  Real rel_gap;
};
FisherInformation fisher_information_detail(const GridDensity& u, Real p);
Real fisher_information(const GridDensity& u, Real p);

// Second-order information functional
//   J_p = 2 integral(u^p (|Hess e_p'|^2 + (p-1) (Lap e_p')^2)),
// reduced to radial/1-D form. Nodes below the support cutoff are excluded;
// absent (nullopt) when fewer than kMinSupportNodes nodes survive.
// Throws if the density is nonpositive strictly inside the support window.
std::optional<Real> second_order_functional(const GridDensity& u, Real p);

// Scale-invariant functional Q_pq = N_pq * exp((2p - q - 1) R_p) * I_p.
// The q-dependence cancels: Q_pq = exp(2 (1/d + p - 1) R_p) I_p, which is
// also the continuous continuation through p = 1 (there exp((2/d) H) I_1).
// Invariant under dilation; tests pin that exactly.
Real q_functional(const GridDensity& u, const Orders& o);

// Everything above, evaluated once. Fields that are undefined for the
// given orders or state are absent rather than NaN: E_p at p = 1, the
// information functionals at p <= 1/2, J_p when too little support
// survives the cutoff.
struct FunctionalSnapshot {
  Real t = 0.0;
  Real mass = 1.0;
  Real m_p = 0.0;
  std::optional<Real> e_p;
  Real r_p = 0.0;
  Real t_p = 0.0;
  Real s_pq = 0.0;
  Real n_pq = 0.0;
  Real p_p = 0.0;
  Real b_p = 0.0;
  Real n_shannon = 0.0;
  std::optional<Real> i_p;
  std::optional<Real> j_p;
  std::optional<Real> q_pq;
};
FunctionalSnapshot evaluate_snapshot(const GridDensity& u, const Orders& o,
                                     Real t = 0.0);

}  // namespace entropylab

#endif  // ENTROPYLAB_FUNCTIONALS_HPP
