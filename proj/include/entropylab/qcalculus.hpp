#ifndef ENTROPYLAB_QCALCULUS_HPP
#define ENTROPYLAB_QCALCULUS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "entropylab/orders.hpp"
#include "entropylab/types.hpp"

// Deformed logarithm/exponential of order q and the scalar entropy core
// shared by the scalar and grid evaluation paths.
//
// q_log(s)  = (s^(1-q) - 1) / (1 - q),        q_log -> log   as q -> 1
// q_exp(s)  = [1 + (1-q) s]_+^(1/(1-q)),      q_exp -> exp   as q -> 1
//
// Both are evaluated through expm1/log1p so they stay accurate uniformly in
// q, including q within kLimitEps of 1 where the analytic limit branch is
// taken. q_exp(q_log(s)) == s holds to machine precision on the common
// domain; tests pin that round trip.
namespace entropylab {

inline Real q_log(Real s, Real q) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::domain_error("q_log: argument must be positive and finite");
  const Real ls = std::log(s);
  if (std::abs(q - 1.0) < config::kLimitEps) return ls;
  return std::expm1((1.0 - q) * ls) / (1.0 - q);
}

inline Real q_exp(Real s, Real q) {
  if (!std::isfinite(s)) throw std::domain_error("q_exp: argument must be finite");
  if (std::abs(q - 1.0) < config::kLimitEps) return std::exp(s);
  const Real base = 1.0 + (1.0 - q) * s;
  if (base <= 0.0) {
    // Cutoff branch: [.]_+ kills the value for q < 1; for q > 1 the
    // negative exponent makes the cutoff a divergence instead.
    return q < 1.0 ? 0.0 : std::numeric_limits<Real>::infinity();
  }
  return std::exp(std::log1p((1.0 - q) * s) / (1.0 - q));
}

// Entropy of order (p, q) from a Renyi entropy value. This is the single
// scalar core used everywhere: S_pq = q_log(exp(R_p)) evaluated stably as
// expm1((1-q) R_p)/(1-q).
inline Real s_pq_from_renyi(Real renyi, Real q) {
  if (!std::isfinite(renyi))
    throw std::domain_error("s_pq_from_renyi: Renyi entropy must be finite");
  if (std::abs(q - 1.0) < config::kLimitEps) return renyi;
  return std::expm1((1.0 - q) * renyi) / (1.0 - q);
}

// Entropy of order (p, q) from a precomputed p-th moment z = integral(u^p).
// The moment carries no entropy information when p is within kLimitEps of 1
// (z == 1 for every density); callers must use the density path there.
inline Real s_pq_scalar(Real z, const Orders& o) {
  if (!(z > 0.0) || !std::isfinite(z))
    throw std::domain_error("s_pq_scalar: moment must be positive and finite");
  if (o.shannon_limit_p())
    throw std::domain_error(
        "s_pq_scalar: the p-th moment degenerates as p -> 1; "
        "evaluate from the density instead");
  return s_pq_from_renyi(std::log(z) / (1.0 - o.p), o.q);
}

}  // namespace entropylab

#endif  // ENTROPYLAB_QCALCULUS_HPP
